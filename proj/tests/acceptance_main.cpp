// End-to-end acceptance harness.  Each criterion prints one PASS/FAIL line
// with its wall time; the process exits non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <hsforce/hsforce.hpp>

#include "oracle.hpp"
#include "support.hpp"

using namespace hsforce;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<Rational> fractions_up_to(long max_den) {
    std::vector<Rational> qs;
    for (long n = 3; n <= max_den; ++n)
        for (long m = 1; 2 * m < n; ++m)
            if (std::gcd(m, n) == 1) qs.push_back(Rational{m, n});
    return qs;
}

std::set<std::string> forced_keys(const PruningRegion& region, std::size_t max_period) {
    return oracle::orbit_keys(forced_periodic(region, max_period).forced);
}

bool run_cli(const std::string& args, std::string& out) {
    const std::string cmd = std::string("\"") + HSFORCE_CLI_PATH + "\" " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return false;
    out.clear();
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
}

// ---- criteria ------------------------------------------------------------

bool c1_nbt_goldens(std::string& why) {
    const struct { Rational q; const char* code; } cases[] = {
        {Rational(2, 7), "10011001"},
        {Rational(1, 3), "1001"},
        {Rational(2, 5), "101101"},
        {Rational(1, 4), "10001"},
    };
    nbt_code(Rational(2, 7));  // warm-up outside the timed calls
    for (const auto& c : cases) {
        const auto t0 = Clock::now();
        const Word got = nbt_code(c.q);
        const double ms = ms_since(t0);
        if (got.str() != c.code) {
            why = "code for " + c.q.str() + " is " + got.str() + ", expected " + c.code;
            return false;
        }
        if (ms >= 1.0) {
            why = "code for " + c.q.str() + " took " + std::to_string(ms) + " ms";
            return false;
        }
    }
    return true;
}

bool c2_nbt_sweep(std::string& why) {
    for (const Rational& q : fractions_up_to(200)) {
        const Word c = nbt_code(q);
        std::string bad;
        if (c.size() != static_cast<std::size_t>(q.n + 1)) bad = "length";
        else if (!is_palindrome(c)) bad = "palindrome";
        else if (ones_count(c) != static_cast<std::size_t>(2 * q.m)) bad = "ones count";
        else {
            // shape 1 0^{a_1} 11 0^{a_2} ... 11 0^{a_m} 1 with a_i >= 0:
            // interior 11-blocks merge into even runs when a gap is empty
            std::vector<std::size_t> one_runs, zero_runs;
            for (std::size_t i = 0; i < c.size();) {
                std::size_t j = i;
                while (j < c.size() && c[j] == c[i]) ++j;
                (c[i] == '1' ? one_runs : zero_runs).push_back(j - i);
                i = j;
            }
            bool ok = c[0] == '1' && c.back() == '1' && one_runs.size() >= 2 &&
                      zero_runs.size() == one_runs.size() - 1 && one_runs.front() == 1 &&
                      one_runs.back() == 1;
            for (std::size_t k = 1; ok && k + 1 < one_runs.size(); ++k)
                ok = one_runs[k] % 2 == 0;
            if (!ok) bad = "run shape";
        }
        if (!bad.empty()) {
            why = "invariant '" + bad + "' fails for " + q.str() + " -> " + c.str();
            return false;
        }
    }
    return true;
}

bool c3_hall_order(std::string& why) {
    const auto qs = fractions_up_to(30);
    std::size_t violations = 0;
    for (const auto& a : qs)
        for (const auto& b : qs)
            if (a < b && cmp_unimodal(star_tail(a), star_tail(b)) != Ordering::GT)
                ++violations;
    if (violations) {
        why = std::to_string(violations) + " order violations among " +
              std::to_string(qs.size()) + " parameters";
        return false;
    }
    return true;
}

bool c4_plist_example(std::string& why) {
    const std::vector<Rational> qs = {Rational(2, 5), Rational(2, 7), Rational(1, 3)};
    const PListAnalysis a = limiting_structure(qs);
    if (!a.is_plist || a.chain != std::vector<std::size_t>{1, 3, 4} ||
        a.limiting != std::vector<std::size_t>{1, 3}) {
        why = "limiting structure mismatch";
        return false;
    }
    const auto region = region_plist(qs);
    if (region.size() != 2) {
        why = "expected 2 rectangles, got " + std::to_string(region.size());
        return false;
    }
    const auto has = [](const std::string& s, const std::string& part) {
        return s.find(part) != std::string::npos;
    };
    if (!has(region[0].provenance, "(1011010100110011)") ||
        !has(region[1].provenance, "(10011)")) {
        why = "anchor words not reported verbatim: " + region[0].provenance + " / " +
              region[1].provenance;
        return false;
    }
    if (!(region[0].y_min == TailSeq::parse("0(1001100101011011)") &&
          region[0].y_max == TailSeq::parse("(1100110010101101)") &&
          region[1].y_min == TailSeq::parse("0(10011)") &&
          region[1].y_max == TailSeq::parse("(11001)") &&
          region[0].x_min == TailSeq::parse("1011010100110010100101(0)") &&
          region[1].x_min == TailSeq::parse("100101(0)"))) {
        why = "rectangle sides mismatch";
        return false;
    }
    return true;
}

bool c5_star_monotonicity(std::string& why) {
    if (!(region_star(Rational(2, 7))[0].x_min == TailSeq::parse("0110010(0)"))) {
        why = "star x_min anchor for 2/7 mismatch";
        return false;
    }
    const auto qs = fractions_up_to(11);
    std::vector<Rectangle> rects;
    std::vector<std::set<std::string>> forced;
    for (const auto& q : qs) {
        rects.push_back(region_star(q)[0]);
        forced.push_back(forced_keys({rects.back()}, 12));
    }
    for (std::size_t i = 0; i < qs.size(); ++i)
        for (std::size_t j = 0; j < qs.size(); ++j) {
            const bool ge = qs[j] <= qs[i];
            if (rect_subset(rects[i], rects[j]) != ge) {
                why = "nesting mismatch for " + qs[i].str() + " vs " + qs[j].str();
                return false;
            }
            const bool incl = std::includes(forced[i].begin(), forced[i].end(),
                                            forced[j].begin(), forced[j].end());
            if (incl != ge) {
                why = "forced-set inclusion disagrees with the parameter order for " +
                      qs[i].str() + " vs " + qs[j].str();
                return false;
            }
        }
    return true;
}

bool c6_verifier(std::string& why) {
    const auto timed_verify = [&why](const std::string& name, const Rectangle& r,
                                     const PruningRegion& excluded, VerifyStatus want,
                                     Verdict& out) {
        const auto t0 = Clock::now();
        out = verify_pruning_domain(r, excluded, 256);
        const double ms = ms_since(t0);
        if (ms >= 1000.0) {
            why = name + " verification took " + std::to_string(ms) + " ms";
            return false;
        }
        if (out.status != want) {
            why = name + " verification returned the wrong status";
            return false;
        }
        return true;
    };
    Verdict v;
    if (!timed_verify("star 2/7", region_star(Rational(2, 7))[0], {}, VerifyStatus::Verified, v))
        return false;
    if (!timed_verify("decorated 11", region_maximal(Word("11"))[0], {},
                      VerifyStatus::Verified, v))
        return false;
    const auto chain = region_plist({Rational(2, 5), Rational(2, 7), Rational(1, 3)});
    if (!timed_verify("chained rect 1", chain[0], {}, VerifyStatus::Verified, v)) return false;
    if (!timed_verify("unshrunk domain", fixtures::unshrunk_maximal_rectangle(), {},
                      VerifyStatus::Violated, v))
        return false;
    if (!v.witness || !(v.witness->forward == TailSeq::parse("101(0)")) ||
        !(v.witness->backward == TailSeq::parse("1101101(0)")) ||
        !rect_contains(fixtures::unshrunk_maximal_rectangle(), *v.witness)) {
        why = "unshrunk violation witness not reproduced";
        return false;
    }
    return true;
}

bool c7_oracle_equivalence(std::string& why) {
    const struct { const char* name; PruningRegion region; } cases[] = {
        {"star 2/7", region_star(Rational(2, 7))},
        {"decorated 11", region_maximal(Word("11"))},
        {"chained 2/5,2/7,1/3", region_plist({Rational(2, 5), Rational(2, 7), Rational(1, 3)})},
    };
    for (const auto& c : cases) {
        if (forced_keys(c.region, 12) != oracle::forced_set(c.region, 12)) {
            why = std::string("forced set disagrees with the truncation oracle for ") + c.name;
            return false;
        }
    }
    return true;
}

bool c8_self_forcing(std::string& why) {
    std::vector<HomoclinicOrbit> gens;
    for (const char* w : {"1", "11", "10", "1111", "1001"})
        gens.push_back(HomoclinicOrbit::maximal(Word(w)));
    const auto qs = fractions_up_to(11);
    for (const auto& q : qs) {
        gens.push_back(HomoclinicOrbit::star(q));
        gens.push_back(HomoclinicOrbit::chain({q}));
    }
    gens.push_back(HomoclinicOrbit::chain({Rational(2, 5), Rational(2, 7), Rational(1, 3)}));
    gens.push_back(HomoclinicOrbit::chain({Rational(2, 7), Rational(1, 3), Rational(2, 5),
                                           Rational(1, 4)}));
    for (const auto& g : gens)
        if (!forces_pair(g, g).avoids) {
            why = g.label() + " does not avoid its own region";
            return false;
        }
    for (const auto& q : qs)
        if (!orbit_avoids(region_star(q), PeriodicOrbit{Word("1")}).avoids) {
            why = "fixed point 1^inf not forced by star " + q.str();
            return false;
        }
    return true;
}

bool c9_cli_determinism(std::string& why) {
    const std::string args = "forced --star 2/7 --max-period 16 --format csv";
    std::string first, second;
    const auto t0 = Clock::now();
    if (!run_cli(args, first)) {
        why = "first CLI run failed";
        return false;
    }
    const double ms1 = ms_since(t0);
    const auto t1 = Clock::now();
    if (!run_cli(args, second)) {
        why = "second CLI run failed";
        return false;
    }
    const double ms2 = ms_since(t1);
    if (first.empty() || first.rfind("# forced", 0) != 0) {
        why = "unexpected CLI output prefix";
        return false;
    }
    if (first != second) {
        why = "two runs differ";
        return false;
    }
    if (ms1 >= 5000.0 || ms2 >= 5000.0) {
        why = "CLI run exceeded 5 s";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    const struct {
        const char* name;
        double budget_ms;  // 0 = untimed
        bool (*run)(std::string&);
    } criteria[] = {
        {"1 code golden values (each call < 1 ms)", 0, c1_nbt_goldens},
        {"2 code invariants, denominators <= 200", 5000, c2_nbt_sweep},
        {"3 parameter order realized by code streams, denominators <= 30", 0, c3_hall_order},
        {"4 worked three-parameter list: chain, anchors, sides", 10, c4_plist_example},
        {"5 star anchor, nesting and forced-set monotonicity (denominators <= 11)", 30000,
         c5_star_monotonicity},
        {"6 boundary verifier: three certificates and one refutation (< 1 s each)", 0,
         c6_verifier},
        {"7 forced sets match the truncation oracle at max period 12", 60000,
         c7_oracle_equivalence},
        {"8 self-forcing and boundary semantics", 0, c8_self_forcing},
        {"9 CLI determinism, forced table at max period 16", 10000, c9_cli_determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string why;
        const auto t0 = Clock::now();
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const double ms = ms_since(t0);
        if (ok && c.budget_ms > 0 && ms >= c.budget_ms) {
            ok = false;
            why = "over time budget of " + std::to_string(c.budget_ms) + " ms";
        }
        std::printf("%s criterion %s (%.1f ms)\n", ok ? "PASS" : "FAIL", c.name, ms);
        if (!ok) {
            std::printf("     %s\n", why.c_str());
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
