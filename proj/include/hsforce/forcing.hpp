#pragma once

// Forcing queries: which periodic orbits survive a pruning region, and
// pairwise forcing between generator orbits, decided by region avoidance.

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "orbit.hpp"
#include "plist.hpp"
#include "region.hpp"

namespace hsforce {

// Hard period cap 24; the HSFORCE_CAP environment variable may lower it.
inline std::size_t period_cap() {
    std::size_t cap = 24;
    if (const char* env = std::getenv("HSFORCE_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && static_cast<std::size_t>(v) < cap)
            cap = static_cast<std::size_t>(v);
    }
    return cap;
}

// A generator orbit from one of the three supported families.
struct HomoclinicOrbit {
    enum class Family { Maximal, Star, Chain };
    Family family;
    Word w;                    // Maximal
    Rational q;                // Star
    std::vector<Rational> qs;  // Chain

    static HomoclinicOrbit maximal(Word word) {
        if (word.empty()) throw std::invalid_argument("decoration must be non-empty");
        if (auto i = shift_maximal_violation(word))
            throw std::invalid_argument("decoration is not shift-maximal: rotation by " +
                                        std::to_string(*i) + " of " + word.str() +
                                        " is larger");
        return HomoclinicOrbit{Family::Maximal, std::move(word), Rational(), {}};
    }

    static HomoclinicOrbit star(Rational param) {
        return HomoclinicOrbit{Family::Star, Word(), param, {}};
    }

    static HomoclinicOrbit chain(std::vector<Rational> params) {
        const auto a = limiting_structure(params);  // validates non-empty, distinct
        if (!a.is_plist)
            throw std::invalid_argument("parameter list is not a P-list: point C" +
                                        std::to_string(*a.violation_at) +
                                        " is skipped by the chain but has a link of its own");
        return HomoclinicOrbit{Family::Chain, Word(), Rational(), std::move(params)};
    }

    // Chain orbits are decorated orbits for the joined code word.
    Word decoration() const {
        if (family == Family::Maximal) return w;
        if (family == Family::Star) throw std::logic_error("star orbits have no decoration");
        Word u;
        for (std::size_t i = 0; i < qs.size(); ++i) {
            if (i) u = u + Word("0");
            u = u + nbt_code(qs[i]);
        }
        return u;
    }

    PlanePoint base() const {
        if (family == Family::Star) return homoclinic_base_star(q);
        return homoclinic_base_maximal(decoration());
    }

    PruningRegion region() const {
        switch (family) {
            case Family::Maximal: return region_maximal(w);
            case Family::Star: return region_star(q);
            case Family::Chain: return region_plist(qs);
        }
        throw std::logic_error("unreachable");
    }

    std::string label() const {
        switch (family) {
            case Family::Maximal: return "maximal:w=" + w.str();
            case Family::Star: return "star:q=" + q.str();
            case Family::Chain: {
                std::string s = "plist:";
                for (std::size_t i = 0; i < qs.size(); ++i) s += (i ? "," : "") + qs[i].str();
                return s;
            }
        }
        throw std::logic_error("unreachable");
    }
};

// Shifts k = -window .. window of a homoclinic orbit, in shift order.
inline std::vector<PlanePoint> homoclinic_points(const PlanePoint& base, long window) {
    if (window < 0) throw std::invalid_argument("window must be non-negative");
    std::vector<PlanePoint> pts;
    pts.reserve(static_cast<std::size_t>(2 * window + 1));
    for (long k = -window; k <= window; ++k) pts.push_back(shift_point(base, k));
    return pts;
}

struct AvoidResult {
    bool avoids = true;
    std::optional<PlanePoint> witness;      // a contained orbit point, when avoids is false
    std::optional<std::size_t> rect_index;  // rectangle containing the witness
    std::optional<long> shift;              // witness = shift_point(base or code phase, shift)
};

namespace detail {

inline AvoidResult avoid_scan(const PruningRegion& region, const std::vector<PlanePoint>& pts,
                              long first_shift) {
    for (std::size_t j = 0; j < pts.size(); ++j)
        for (std::size_t i = 0; i < region.size(); ++i)
            if (rect_contains(region[i], pts[j]))
                return AvoidResult{false, pts[j], i, first_shift + static_cast<long>(j)};
    return AvoidResult{};
}

}  // namespace detail

inline AvoidResult orbit_avoids(const PruningRegion& region, const PeriodicOrbit& o) {
    return detail::avoid_scan(region, periodic_orbit_points(o.code), 0);
}

// Complete despite the infinite orbit: outside the trivialization window one
// coordinate is exactly 0^inf, the order minimum, which no open rectangle
// contains strictly.
inline AvoidResult orbit_avoids(const PruningRegion& region, const HomoclinicOrbit& o) {
    const PlanePoint base = o.base();
    const auto [lo, hi] = homoclinic_shift_window(base);
    std::vector<PlanePoint> pts;
    pts.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long k = lo; k <= hi; ++k) pts.push_back(shift_point(base, k));
    return detail::avoid_scan(region, pts, lo);
}

struct ExcludedOrbit {
    PeriodicOrbit orbit;
    PlanePoint witness;
    std::size_t rect_index;
};

struct ForcingReport {
    std::size_t max_period = 0;
    std::vector<PeriodicOrbit> forced;
    std::vector<ExcludedOrbit> excluded;
};

// Partition of all orbits of period <= max_period by region avoidance,
// in enumeration (period, code) order.
inline ForcingReport forced_periodic(const PruningRegion& region, std::size_t max_period) {
    if (max_period < 1) throw std::invalid_argument("max period must be at least 1");
    if (max_period > period_cap())
        throw std::invalid_argument("max period " + std::to_string(max_period) +
                                    " exceeds the cap " + std::to_string(period_cap()));
    ForcingReport rep{max_period, {}, {}};
    for (const auto& o : enumerate_periodic(max_period)) {
        const AvoidResult res = orbit_avoids(region, o);
        if (res.avoids)
            rep.forced.push_back(o);
        else
            rep.excluded.push_back(ExcludedOrbit{o, *res.witness, *res.rect_index});
    }
    return rep;
}

// a forces b exactly when the orbit of b avoids the pruning region of a.
inline AvoidResult forces_pair(const HomoclinicOrbit& a, const PeriodicOrbit& b) {
    return orbit_avoids(a.region(), b);
}

inline AvoidResult forces_pair(const HomoclinicOrbit& a, const HomoclinicOrbit& b) {
    return orbit_avoids(a.region(), b);
}

// Sufficient order conditions.  Forces is a certificate; Unknown says only
// that the condition does not apply.
enum class Sufficiency { Forces, Unknown };

// Decorated pair: w >=1 w' and w~ >=1 w~' under the u010^inf completion.
inline Sufficiency sufficient_maximal_pair(const Word& w, const Word& v) {
    for (const Word* u : {&w, &v}) {
        if (u->empty()) throw std::invalid_argument("decoration must be non-empty");
        if (!is_shift_maximal(*u))
            throw std::invalid_argument("decoration is not shift-maximal: " + u->str());
    }
    const auto comp = [](const Word& u) { return TailSeq(u + Word("01"), Word("0")); };
    if (ge1(comp(w), comp(v)) &&
        ge1(comp(word_reverse(w)), comp(word_reverse(v))))
        return Sufficiency::Forces;
    return Sufficiency::Unknown;
}

inline Sufficiency sufficient_star_pair(const Rational& a, const Rational& b) {
    return b <= a ? Sufficiency::Forces : Sufficiency::Unknown;
}

// Same-combinatorics lists with pointwise smaller parameters force.
inline Sufficiency sufficient_plist_pair(const std::vector<Rational>& a,
                                         const std::vector<Rational>& b) {
    if (a.empty() || a.size() != b.size())
        throw std::invalid_argument("lists must be non-empty and of equal length");
    if (!is_plist(a) || !is_plist(b))
        throw std::invalid_argument("both lists must be P-lists");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if ((a[i] < a[j]) != (b[i] < b[j])) return Sufficiency::Unknown;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] < b[i])) return Sufficiency::Unknown;
    return Sufficiency::Forces;
}

}  // namespace hsforce
