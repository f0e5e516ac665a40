// hsforce: pruning regions and forced orbits of horseshoe homoclinic
// families.  See README.md for the command reference.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <hsforce/hsforce.hpp>

namespace {

using namespace hsforce;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& f) {
    if (f == "text") return Format::Text;
    if (f == "json") return Format::Json;
    if (f == "csv") return Format::Csv;
    throw std::invalid_argument("unknown format: " + f);
}

std::vector<Rational> parse_qlist(const std::string& text) {
    std::vector<Rational> qs;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string item =
            text.substr(start, comma == std::string::npos ? comma : comma - start);
        qs.push_back(Rational::parse(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return qs;
}

// Shared generator flags: exactly one of --maximal/--star/--plist.
struct GenFlags {
    std::string maximal, star, plist;

    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("--maximal", maximal, "decoration word (shift-maximal)");
        auto* b = cmd->add_option("--star", star, "star parameter m/n in (0,1/2)");
        auto* c = cmd->add_option("--plist", plist, "comma-separated parameter list");
        a->excludes(b)->excludes(c);
        b->excludes(c);
    }

    HomoclinicOrbit build() const {
        if (!maximal.empty()) return HomoclinicOrbit::maximal(Word(maximal));
        if (!star.empty()) return HomoclinicOrbit::star(Rational::parse(star));
        if (!plist.empty()) return HomoclinicOrbit::chain(parse_qlist(plist));
        throw std::invalid_argument("need a generator: --maximal, --star, or --plist");
    }
};

// Compact generator spec for positional arguments: family:args.
HomoclinicOrbit parse_generator_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("generator spec must be maximal:<w>, star:<m/n>, or "
                                    "plist:<q1,q2,...>: " + spec);
    const std::string family = spec.substr(0, colon);
    const std::string args = spec.substr(colon + 1);
    if (family == "maximal") return HomoclinicOrbit::maximal(Word(args));
    if (family == "star") return HomoclinicOrbit::star(Rational::parse(args));
    if (family == "plist") return HomoclinicOrbit::chain(parse_qlist(args));
    throw std::invalid_argument("unknown generator family: " + family);
}

std::string point_str(const PlanePoint& p) {
    return "(" + p.forward.str() + "," + p.backward.str() + ")";
}

void cmd_nbt(const std::string& frac, Format fmt) {
    const Rational q = Rational::parse(frac);
    const Word code = nbt_code(q);
    if (fmt == Format::Json)
        std::cout << json{{"q", q.str()}, {"code", code.str()}}.dump(2) << "\n";
    else if (fmt == Format::Csv)
        std::cout << "q,code\n" << q.str() << "," << code.str() << "\n";
    else
        std::cout << code.str() << "\n";
}

void cmd_maximal_check(const std::string& word, Format fmt) {
    const Word w(word);
    const auto violation = shift_maximal_violation(w);
    if (fmt == Format::Json) {
        json j{{"w", w.str()}, {"maximal", !violation.has_value()}};
        if (violation) j["violating_rotation"] = *violation;
        std::cout << j.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "w,maximal,violating_rotation\n"
                  << w.str() << "," << (violation ? "false" : "true") << ","
                  << (violation ? std::to_string(*violation) : "") << "\n";
    } else if (violation) {
        std::cout << "not maximal: rotation by " << *violation << " of " << w.str()
                  << " is larger\n";
    } else {
        std::cout << "maximal\n";
    }
}

void print_region(const PruningRegion& region, Format fmt) {
    if (fmt == Format::Json) {
        std::cout << to_json(region).dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "x_min,x_max,y_min,y_max,provenance\n";
        for (const auto& r : region)
            std::cout << r.x_min.str() << "," << r.x_max.str() << "," << r.y_min.str()
                      << "," << r.y_max.str() << "," << r.provenance << "\n";
    } else {
        for (const auto& r : region)
            std::cout << "x=(" << r.x_min.str() << ", " << r.x_max.str() << ") y=("
                      << r.y_min.str() << ", " << r.y_max.str() << ")  [" << r.provenance
                      << "]\n";
    }
}

void cmd_forced(const HomoclinicOrbit& gen, std::size_t max_period, Format fmt) {
    const PruningRegion region = gen.region();
    const ForcingReport rep = forced_periodic(region, max_period);
    if (fmt == Format::Json) {
        std::cout << to_json(gen, region, rep).dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "# forced\nperiod,code\n";
        for (const auto& o : rep.forced)
            std::cout << o.period() << "," << o.code.str() << "\n";
        std::cout << "# excluded\nperiod,code,witness_forward,witness_backward,rect_index\n";
        for (const auto& e : rep.excluded)
            std::cout << e.orbit.period() << "," << e.orbit.code.str() << ","
                      << e.witness.forward.str() << "," << e.witness.backward.str() << ","
                      << e.rect_index << "\n";
    } else {
        std::cout << "generator: " << gen.label() << "\nmax period: " << max_period
                  << "\nforced (" << rep.forced.size() << "):\n";
        for (const auto& o : rep.forced)
            std::cout << "  " << o.period() << " " << o.code.str() << "\n";
        std::cout << "excluded (" << rep.excluded.size() << "):\n";
        for (const auto& e : rep.excluded)
            std::cout << "  " << e.orbit.period() << " " << e.orbit.code.str()
                      << " witness=" << point_str(e.witness) << " rect=" << e.rect_index
                      << "\n";
    }
}

void cmd_compare(const HomoclinicOrbit& a, const HomoclinicOrbit& b, Format fmt) {
    const AvoidResult ab = forces_pair(a, b);
    const AvoidResult ba = forces_pair(b, a);

    std::optional<Sufficiency> suff;
    if (a.family == b.family) {
        using F = HomoclinicOrbit::Family;
        if (a.family == F::Maximal) suff = sufficient_maximal_pair(a.w, b.w);
        else if (a.family == F::Star) suff = sufficient_star_pair(a.q, b.q);
        else if (a.qs.size() == b.qs.size()) suff = sufficient_plist_pair(a.qs, b.qs);
    }

    const auto describe = [](const AvoidResult& r) {
        json j{{"forces", r.avoids}};
        if (!r.avoids) {
            j["witness"] = to_json(*r.witness);
            j["rect_index"] = *r.rect_index;
            j["shift"] = *r.shift;
        }
        return j;
    };
    if (fmt == Format::Json) {
        json j{{"a", to_json(a)},
               {"b", to_json(b)},
               {"a_forces_b", describe(ab)},
               {"b_forces_a", describe(ba)}};
        if (suff)
            j["sufficient_order_check"] =
                *suff == Sufficiency::Forces ? "Forces" : "Unknown";
        std::cout << j.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "direction,forces,witness_forward,witness_backward,rect_index,shift\n";
        const auto row = [](const std::string& dir, const AvoidResult& r) {
            std::cout << dir << "," << (r.avoids ? "true" : "false") << ",";
            if (!r.avoids)
                std::cout << r.witness->forward.str() << "," << r.witness->backward.str()
                          << "," << *r.rect_index << "," << *r.shift;
            else
                std::cout << ",,,";
            std::cout << "\n";
        };
        row("a_forces_b", ab);
        row("b_forces_a", ba);
    } else {
        const auto line = [](const std::string& from, const std::string& to,
                             const AvoidResult& r) {
            std::cout << from << " forces " << to << ": " << (r.avoids ? "true" : "false");
            if (!r.avoids)
                std::cout << "  (orbit meets region: witness=" << point_str(*r.witness)
                          << " rect=" << *r.rect_index << " shift=" << *r.shift << ")";
            std::cout << "\n";
        };
        line(a.label(), b.label(), ab);
        line(b.label(), a.label(), ba);
        if (suff)
            std::cout << "sufficient order check: "
                      << (*suff == Sufficiency::Forces ? "Forces" : "Unknown") << "\n";
    }
}

void cmd_verify(const HomoclinicOrbit& gen, long bound, Format fmt) {
    const PruningRegion region = gen.region();
    std::vector<Verdict> verdicts;
    for (std::size_t i = 0; i < region.size(); ++i) {
        PruningRegion excluded(region.begin(), region.begin() + static_cast<long>(i));
        verdicts.push_back(verify_pruning_domain(region[i], excluded, bound));
    }
    if (fmt == Format::Json) {
        json arr = json::array();
        for (std::size_t i = 0; i < region.size(); ++i) {
            json j = to_json(verdicts[i]);
            j["rect_index"] = i;
            j["provenance"] = region[i].provenance;
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "rect_index,status,n,side,witness_forward,witness_backward,"
                     "bound_reached\n";
        for (std::size_t i = 0; i < region.size(); ++i) {
            const Verdict& v = verdicts[i];
            const char* status = v.status == VerifyStatus::Verified     ? "Verified"
                                 : v.status == VerifyStatus::Violated   ? "Violated"
                                                                        : "Inconclusive";
            std::cout << i << "," << status << ","
                      << (v.n ? std::to_string(*v.n) : "") << ","
                      << (v.side ? (*v.side == Side::Stable ? "stable" : "unstable") : "")
                      << "," << (v.witness ? v.witness->forward.str() : "") << ","
                      << (v.witness ? v.witness->backward.str() : "") << ","
                      << (v.bound_reached ? "true" : "false") << "\n";
        }
    } else {
        for (std::size_t i = 0; i < region.size(); ++i) {
            const Verdict& v = verdicts[i];
            std::cout << "rect " << i << " [" << region[i].provenance << "]: ";
            if (v.status == VerifyStatus::Verified) {
                std::cout << "Verified";
            } else if (v.status == VerifyStatus::Violated) {
                std::cout << "Violated at n=" << *v.n << " ("
                          << (*v.side == Side::Stable ? "stable" : "unstable")
                          << " side), witness=" << point_str(*v.witness);
            } else {
                std::cout << "Inconclusive" << (v.bound_reached ? " (bound reached)" : "");
            }
            std::cout << "\n";
            for (const auto& note : v.notes) std::cout << "  note: " << note << "\n";
        }
    }
}

void cmd_plot(const HomoclinicOrbit& gen, const std::string& out_path, int depth, int size,
              std::optional<std::size_t> max_period) {
    const PruningRegion region = gen.region();
    std::vector<SvgPoint> dots;
    if (max_period) {
        const ForcingReport rep = forced_periodic(region, *max_period);
        for (const auto& o : rep.forced)
            for (const auto& p : periodic_orbit_points(o.code))
                dots.push_back(SvgPoint{p, true, o.code.str()});
        for (const auto& e : rep.excluded)
            for (const auto& p : periodic_orbit_points(e.orbit.code))
                dots.push_back(SvgPoint{p, false, e.orbit.code.str()});
    }
    const std::string svg = emit_svg(region, dots, SvgOptions{size, depth});
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << svg;
    if (!out.good()) throw std::runtime_error("failed writing output file: " + out_path);
}

int run(int argc, char** argv) {
    CLI::App app{"Pruning regions and forced orbits of horseshoe homoclinic families"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format: text, json, csv")
        ->capture_default_str();

    auto* nbt_cmd = app.add_subcommand("nbt", "print the code c_q of a star parameter")->fallthrough();
    std::string nbt_frac;
    nbt_cmd->add_option("fraction", nbt_frac, "parameter m/n in (0,1/2)")->required();

    auto* max_cmd =
        app.add_subcommand("maximal-check", "test whether a word is shift-maximal")->fallthrough();
    std::string max_word;
    max_cmd->add_option("word", max_word, "binary word")->required();

    auto* region_cmd = app.add_subcommand("region", "print a generator's pruning region")->fallthrough();
    GenFlags region_gen;
    region_gen.attach(region_cmd);

    auto* forced_cmd =
        app.add_subcommand("forced", "partition periodic orbits by region avoidance")->fallthrough();
    GenFlags forced_gen;
    forced_gen.attach(forced_cmd);
    std::size_t max_period = 0;
    forced_cmd->add_option("--max-period", max_period, "largest period to enumerate")
        ->required();

    auto* compare_cmd =
        app.add_subcommand("compare", "forcing relation between two generators")->fallthrough();
    std::string spec_a, spec_b;
    compare_cmd->add_option("genA", spec_a, "maximal:<w> | star:<m/n> | plist:<list>")
        ->required();
    compare_cmd->add_option("genB", spec_b, "maximal:<w> | star:<m/n> | plist:<list>")
        ->required();

    auto* verify_cmd =
        app.add_subcommand("verify", "check the pruning-domain condition per rectangle")->fallthrough();
    GenFlags verify_gen;
    verify_gen.attach(verify_cmd);
    long bound = 256;
    verify_cmd->add_option("--bound", bound, "iteration bound")->capture_default_str();

    auto* plot_cmd = app.add_subcommand("plot", "render the symbol plane to SVG")->fallthrough();
    GenFlags plot_gen;
    plot_gen.attach(plot_cmd);
    std::string out_path;
    plot_cmd->add_option("--out", out_path, "output SVG path")->required();
    int depth = 24;
    plot_cmd->add_option("--depth", depth, "embedding depth in [8,64]")
        ->capture_default_str();
    int size = 640;
    plot_cmd->add_option("--size", size, "image size in pixels")->capture_default_str();
    std::size_t plot_period = 0;
    auto* plot_period_opt =
        plot_cmd->add_option("--max-period", plot_period, "also plot orbits up to period");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const Format fmt = parse_format(format);
    if (nbt_cmd->parsed()) cmd_nbt(nbt_frac, fmt);
    if (max_cmd->parsed()) cmd_maximal_check(max_word, fmt);
    if (region_cmd->parsed()) print_region(region_gen.build().region(), fmt);
    if (forced_cmd->parsed()) cmd_forced(forced_gen.build(), max_period, fmt);
    if (compare_cmd->parsed())
        cmd_compare(parse_generator_spec(spec_a), parse_generator_spec(spec_b), fmt);
    if (verify_cmd->parsed()) {
        if (bound < 1) throw std::invalid_argument("--bound must be at least 1");
        cmd_verify(verify_gen.build(), bound, fmt);
    }
    if (plot_cmd->parsed()) {
        if (depth < 8 || depth > 64)
            throw std::invalid_argument("--depth must lie in [8,64]");
        if (size < 64) throw std::invalid_argument("--size must be at least 64");
        cmd_plot(plot_gen.build(), out_path, depth, size,
                 plot_period_opt->count() ? std::optional<std::size_t>(plot_period)
                                          : std::nullopt);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
