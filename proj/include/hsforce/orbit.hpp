#pragma once

// Periodic orbits (primitive necklaces, named by the unimodal-maximal
// rotation of their code) and the homoclinic orbits of the two families:
// decorated orbits  ... 0 1 0 w b . 1 0 ...  (b = 0 for even w, 1 for odd)
// and star orbits   ... 0 . c_q 0 ...

#include <algorithm>
#include <vector>

#include "nbt.hpp"
#include "plane.hpp"
#include "tailseq.hpp"
#include "word.hpp"

namespace hsforce {

// The rotation r of a primitive word maximizing (r)^inf in the unimodal
// order.  This is the name under which a periodic orbit is reported.
inline Word canonical_code(const Word& w) {
    if (w.empty()) throw std::invalid_argument("periodic code must be non-empty");
    if (!is_primitive(w)) throw std::invalid_argument("periodic code must be primitive: " + w.str());
    Word best = w;
    TailSeq best_seq(Word(), best);
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word cand = rotate_left(w, i);
        TailSeq cand_seq(Word(), cand);
        if (gt1(cand_seq, best_seq)) {
            best = std::move(cand);
            best_seq = std::move(cand_seq);
        }
    }
    return best;
}

struct PeriodicOrbit {
    Word code;  // canonical (unimodal-maximal) rotation, primitive
    std::size_t period() const { return code.size(); }
    friend bool operator==(const PeriodicOrbit&, const PeriodicOrbit&) = default;
};

// All primitive necklaces of period <= max_period, via Duval's Lyndon-word
// generator, reported as canonical codes sorted by (period, code).
inline std::vector<PeriodicOrbit> enumerate_periodic(std::size_t max_period) {
    std::vector<PeriodicOrbit> out;
    if (max_period == 0) return out;
    std::string t = "0";
    while (!t.empty()) {
        out.push_back(PeriodicOrbit{canonical_code(Word(t))});
        // next Lyndon word: repeat t to full length, strip trailing '1's,
        // bump the last symbol
        std::string u;
        u.reserve(max_period);
        for (std::size_t i = 0; i < max_period; ++i) u.push_back(t[i % t.size()]);
        while (!u.empty() && u.back() == '1') u.pop_back();
        if (!u.empty()) u.back() = '1';
        t = std::move(u);
    }
    std::sort(out.begin(), out.end(), [](const PeriodicOrbit& a, const PeriodicOrbit& b) {
        if (a.period() != b.period()) return a.period() < b.period();
        return a.code.str() < b.code.str();
    });
    return out;
}

// The period() points of the bi-infinite periodic orbit ...www.www...
inline std::vector<PlanePoint> periodic_orbit_points(const Word& code) {
    const std::size_t p = code.size();
    std::vector<PlanePoint> pts;
    pts.reserve(p);
    for (std::size_t j = 0; j < p; ++j) {
        std::string back;
        back.reserve(p);
        for (std::size_t t = 1; t <= p; ++t) back.push_back(code[(j + p - (t % p)) % p]);
        pts.push_back(PlanePoint{TailSeq(Word(), rotate_left(code, j)),
                                 TailSeq(Word(), Word(std::move(back)))});
    }
    return pts;
}

// Anchor point of the decorated homoclinic orbit for decoration w, with the
// binary point placed just before the final 1:
//   even w:  ...010w0.10...   forward 10^inf, backward 0 w~ 01 0^inf
//   odd  w:  ...010w1.10...   forward 10^inf, backward 1 w~ 01 0^inf
// The parity-dependent bridge symbol keeps the orbit off the boundary of
// its own pruning rectangles.
inline PlanePoint homoclinic_base_maximal(const Word& w) {
    if (w.empty()) throw std::invalid_argument("decoration must be non-empty");
    const char bridge = word_parity(w) == Parity::Even ? '0' : '1';
    const Word backward = Word(std::string(1, bridge)) + word_reverse(w) + Word("01");
    return PlanePoint{TailSeq(Word("1"), Word("0")), TailSeq(backward, Word("0"))};
}

// Anchor point of the star homoclinic orbit: ...0.c_q 0...
inline PlanePoint homoclinic_base_star(const Rational& q) {
    return PlanePoint{star_forward(q), zeros()};
}

// Shift range outside of which a homoclinic point is trivial: for
// k > window.second the forward sequence is exactly 0^inf, for
// k < window.first the backward one is.  Such points lie outside every
// open rectangle, since 0^inf is the order minimum.
inline std::pair<long, long> homoclinic_shift_window(const PlanePoint& base) {
    if (base.forward.period() != Word("0") || base.backward.period() != Word("0"))
        throw std::invalid_argument("homoclinic anchor must be eventually zero on both sides");
    return {-static_cast<long>(base.backward.preperiod().size()),
            static_cast<long>(base.forward.preperiod().size())};
}

}  // namespace hsforce
