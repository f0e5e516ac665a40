#pragma once

// Pruning regions: finite unions of open order-rectangles
// (x_min, x_max) x (y_min, y_max) in the coordinates of plane.hpp.

#include <string>
#include <vector>

#include "nbt.hpp"
#include "orbit.hpp"
#include "plane.hpp"
#include "tailseq.hpp"

namespace hsforce {

struct Rectangle {
    TailSeq x_min, x_max;
    TailSeq y_min, y_max;
    std::string provenance;  // human-readable origin tag, e.g. "star:q=2/7"

    friend bool operator==(const Rectangle& a, const Rectangle& b) {
        return a.x_min == b.x_min && a.x_max == b.x_max && a.y_min == b.y_min &&
               a.y_max == b.y_max;
    }
};

using PruningRegion = std::vector<Rectangle>;

inline bool rect_contains(const Rectangle& r, const PlanePoint& p) {
    return lt1(r.x_min, p.forward) && lt1(p.forward, r.x_max) &&
           lt1(r.y_min, p.backward) && lt1(p.backward, r.y_max);
}

// a subseteq b as open rectangles (empty a is not special-cased; all
// rectangles produced here are non-degenerate).
inline bool rect_subset(const Rectangle& a, const Rectangle& b) {
    return le1(b.x_min, a.x_min) && le1(a.x_max, b.x_max) && le1(b.y_min, a.y_min) &&
           le1(a.y_max, b.y_max);
}

namespace detail {

inline Rectangle make_rect(TailSeq x_min, TailSeq x_max, TailSeq level_a, TailSeq level_b,
                           std::string provenance) {
    const bool a_low = lt1(level_a, level_b);
    return Rectangle{std::move(x_min), std::move(x_max),
                     a_low ? std::move(level_a) : std::move(level_b),
                     a_low ? std::move(level_b) : std::move(level_a), std::move(provenance)};
}

}  // namespace detail

// Pruning region of the decorated orbit of a shift-maximal decoration w.
// Single rectangle; the vertical sides depend on the parity of w:
//   even:  x in (w010^inf, 10^inf),  y between (1w~)^inf and 0w~(1w~)^inf
//   odd:   x in (w110^inf, 10^inf),  y between (0w~)^inf and 1w~(0w~)^inf
inline PruningRegion region_maximal(const Word& w) {
    if (w.empty()) throw std::invalid_argument("decoration must be non-empty");
    if (auto i = shift_maximal_violation(w))
        throw std::invalid_argument("decoration is not shift-maximal: rotation by " +
                                    std::to_string(*i) + " of " + w.str() +
                                    " is larger");
    const Word wr = word_reverse(w);
    const bool even = word_parity(w) == Parity::Even;
    const Word bridge(even ? "0" : "1");
    const Word mirror_bridge(even ? "1" : "0");
    TailSeq x_min(w + bridge + Word("1"), Word("0"));
    TailSeq x_max(Word("1"), Word("0"));
    TailSeq level_a(Word(), mirror_bridge + wr);
    TailSeq level_b = level_a.prepend(bridge + wr);
    PruningRegion region{detail::make_rect(std::move(x_min), std::move(x_max),
                                           std::move(level_a), std::move(level_b),
                                           "maximal:w=" + w.str())};
    // Shift-maximality of w alone does not keep the decorated orbit out of
    // the rectangle (e.g. w = 111 lands in it after two backward shifts);
    // such decorations have no pruning region of this shape and are refused.
    const PlanePoint base = homoclinic_base_maximal(w);
    const auto [lo, hi] = homoclinic_shift_window(base);
    for (long k = lo; k <= hi; ++k)
        if (rect_contains(region[0], shift_point(base, k)))
            throw std::invalid_argument("unsupported decoration " + w.str() +
                                        ": the decorated orbit meets its own pruning "
                                        "rectangle at shift " + std::to_string(k));
    return region;
}

// Pruning region of the star orbit of parameter q.  Single rectangle
//   x in (sigma^2(c_q 0^inf), 10^inf),  y in (01^inf, 1^inf).
inline PruningRegion region_star(const Rational& q) {
    return {Rectangle{star_forward(q).drop_front(2), TailSeq(Word("1"), Word("0")),
                      TailSeq(Word("0"), Word("1")), TailSeq(Word(), Word("1")),
                      "star:q=" + q.str()}};
}

}  // namespace hsforce
