#pragma once

// Exact check of the pruning-domain condition for an open rectangle D: for
// every n >= 1 the n-th forward image of the stable boundary edge and the
// n-th backward image of the two unstable boundary edges must not meet
// Int(D).  All data are eventually periodic, so the per-n outcome is
// eventually periodic in n; the check either finds a violation (with a
// witness point), certifies the condition by exhausting one full outcome
// cycle, or reports that the iteration bound was hit first.

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "plane.hpp"
#include "region.hpp"
#include "tailseq.hpp"

namespace hsforce {

enum class Side { Stable, Unstable };

enum class VerifyStatus { Verified, Violated, Inconclusive };

struct Verdict {
    VerifyStatus status = VerifyStatus::Inconclusive;
    // set when status == Violated
    std::optional<long> n;
    std::optional<Side> side;
    std::optional<PlanePoint> witness;
    // set when status == Inconclusive
    bool bound_reached = false;
    std::vector<std::string> notes;
};

namespace detail {

// One boundary edge, in edge-local orientation.  For the stable (left)
// edge the axis is x and the transverse direction is y; for the two
// unstable (horizontal) edges the roles are swapped.  Shifting the edge n
// times moves its anchor to sigma^n(anchor) along the axis and maps its
// transverse extent [seg_lo, seg_hi] to the prepend-images under the
// reversed length-n anchor prefix.
struct EdgeTask {
    Side side;
    TailSeq anchor;
    TailSeq axis_lo, axis_hi;    // the rectangle's own axis interval
    TailSeq trans_lo, trans_hi;  // the rectangle's own transverse interval
    // excluded rectangles, in the same orientation
    std::vector<Rectangle> cut;  // x_* = axis bounds, y_* = transverse bounds
    // stabilisation data
    long settle_n = 0;   // outcomes for n >= settle_n are provably periodic
    long horizon = 0;    // settle_n + one full outcome period
};

// Leading stream of the reversed anchor prefix for shift counts in phase
// phi: symbol i is period[(phi-1-i) mod p].
inline TailSeq reversed_phase_stream(const Word& period, std::size_t phi) {
    const std::size_t p = period.size();
    std::string w(p, '0');
    for (std::size_t i = 0; i < p; ++i) w[i] = period[(phi + 2 * p - 1 - i) % p];
    return TailSeq(Word(), Word(std::move(w)));
}

// Outcome periodicity: for n beyond the anchor preperiod, sigma^n(anchor)
// cycles with the anchor period p, and the reversed prefix begins with an
// arbitrarily long run of one of the p phase streams.  Once that run is
// longer than the first difference between the phase stream and every
// transverse constant, each image-vs-constant comparison depends on the
// phase only; image-vs-image comparisons and prefix parities repeat with
// period 2p.  So outcomes for n >= settle_n repeat with period 2p, and
// scanning one full cycle past settle_n decides all n.
inline void compute_stabilisation(EdgeTask& e) {
    const std::size_t p = e.anchor.period().size();
    const std::size_t pre = e.anchor.preperiod().size();
    std::size_t max_d = 0;
    for (std::size_t phi = 0; phi < p; ++phi) {
        const TailSeq stream = reversed_phase_stream(e.anchor.period(), phi);
        for (const TailSeq* c : {&e.trans_lo, &e.trans_hi})
            if (!(stream == *c)) max_d = std::max(max_d, first_difference(stream, *c));
    }
    e.settle_n = static_cast<long>(pre + 1 + max_d);
    e.horizon = e.settle_n + 2 * static_cast<long>(p);
}

inline EdgeTask make_edge(Side side, TailSeq anchor, const TailSeq& axis_lo,
                          const TailSeq& axis_hi, const TailSeq& trans_lo,
                          const TailSeq& trans_hi, const PruningRegion& excluded,
                          bool swap_excluded) {
    EdgeTask e{side, std::move(anchor), axis_lo, axis_hi, trans_lo, trans_hi, {}, 0, 0};
    for (const Rectangle& r : excluded)
        e.cut.push_back(swap_excluded
                            ? Rectangle{r.y_min, r.y_max, r.x_min, r.x_max, r.provenance}
                            : r);
    compute_stabilisation(e);
    return e;
}

struct SurvivorSearch {
    std::optional<TailSeq> witness;  // survivor within the description cap
    bool over_cap = false;           // survivors exist but none within the cap
};

// A point of [img_lo, img_hi] ∩ (trans_lo, trans_hi) avoiding the interiors
// of the relevant excluded rectangles, if one exists.  The surviving set is
// a finite union of intervals with endpoints among the collected bounds, so
// it is non-empty iff one of those bounds or a between() point of two
// adjacent bounds survives.
inline SurvivorSearch surviving_witness(const EdgeTask& e, const TailSeq& shifted,
                                        const TailSeq& img_lo, const TailSeq& img_hi,
                                        std::size_t size_cap) {
    std::vector<const Rectangle*> relevant;
    for (const Rectangle& c : e.cut)
        if (lt1(c.x_min, shifted) && lt1(shifted, c.x_max)) relevant.push_back(&c);

    std::vector<TailSeq> bounds{img_lo, img_hi, e.trans_lo, e.trans_hi};
    for (const Rectangle* c : relevant) {
        bounds.push_back(c->y_min);
        bounds.push_back(c->y_max);
    }
    std::sort(bounds.begin(), bounds.end(), [](const TailSeq& a, const TailSeq& b) {
        return lt1(a, b);
    });
    bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

    std::vector<TailSeq> candidates;
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        candidates.push_back(bounds[i]);
        if (i + 1 < bounds.size())
            if (auto mid = between(bounds[i], bounds[i + 1])) candidates.push_back(*mid);
    }

    const auto survives = [&](const TailSeq& t) {
        if (!(ge1(t, img_lo) && le1(t, img_hi))) return false;          // on the segment
        if (!(lt1(e.trans_lo, t) && lt1(t, e.trans_hi))) return false;  // strictly inside
        for (const Rectangle* c : relevant)
            if (lt1(c->y_min, t) && lt1(t, c->y_max)) return false;     // pruned already
        return true;
    };
    SurvivorSearch out;
    for (const TailSeq& t : candidates) {
        if (!survives(t)) continue;
        if (t.description_size() <= size_cap) {
            out.witness = t;
            return out;
        }
        out.over_cap = true;
    }
    return out;
}

}  // namespace detail

inline Verdict verify_pruning_domain(const Rectangle& r, const PruningRegion& excluded = {},
                                     long bound = 256) {
    if (bound < 1) throw std::invalid_argument("verification bound must be at least 1");

    std::vector<detail::EdgeTask> edges;
    edges.push_back(detail::make_edge(Side::Stable, r.x_min, r.x_min, r.x_max, r.y_min,
                                      r.y_max, excluded, false));
    edges.push_back(detail::make_edge(Side::Unstable, r.y_min, r.y_min, r.y_max, r.x_min,
                                      r.x_max, excluded, true));
    edges.push_back(detail::make_edge(Side::Unstable, r.y_max, r.y_min, r.y_max, r.x_min,
                                      r.x_max, excluded, true));

    // the bounded-description restriction applies only to the search over
    // the excluded region; a plain crossing always has an exact witness
    std::size_t size_cap = std::numeric_limits<std::size_t>::max();
    if (!excluded.empty()) {
        size_cap = 0;
        for (const TailSeq* s : {&r.x_min, &r.x_max, &r.y_min, &r.y_max})
            size_cap = std::max(size_cap, s->description_size());
        for (const Rectangle& c : excluded)
            for (const TailSeq* s : {&c.x_min, &c.x_max, &c.y_min, &c.y_max})
                size_cap = std::max(size_cap, s->description_size());
        size_cap *= 3;
    }

    long needed = 0;
    for (const auto& e : edges) needed = std::max(needed, e.horizon);
    const long scan_to = std::min(bound, needed);

    Verdict v;
    bool certifiable = true;
    for (long n = 1; n <= scan_to; ++n) {
        for (const auto& e : edges) {
            const TailSeq shifted = e.anchor.drop_front(static_cast<std::size_t>(n));
            if (!(lt1(e.axis_lo, shifted) && lt1(shifted, e.axis_hi))) continue;
            const Word prefix = word_reverse(e.anchor.prefix(static_cast<std::size_t>(n)));
            const TailSeq img_a = e.trans_lo.prepend(prefix);
            const TailSeq img_b = e.trans_hi.prepend(prefix);
            const TailSeq& img_lo = min1(img_a, img_b);
            const TailSeq& img_hi = max1(img_a, img_b);
            if (!(lt1(img_lo, e.trans_hi) && gt1(img_hi, e.trans_lo))) continue;

            // the image crosses the open rectangle; look for a point of the
            // crossing that survives the excluded rectangles
            const auto found = detail::surviving_witness(e, shifted, img_lo, img_hi, size_cap);
            if (found.witness) {
                v.status = VerifyStatus::Violated;
                v.n = n;
                v.side = e.side;
                v.witness = e.side == Side::Stable ? PlanePoint{shifted, *found.witness}
                                                   : PlanePoint{*found.witness, shifted};
                return v;
            }
            if (excluded.empty())
                throw std::logic_error("crossing without exclusions must yield a witness");
            if (found.over_cap) {
                certifiable = false;
                v.notes.push_back("crossing at n=" + std::to_string(n) +
                                  " has no witness within the description bound");
            } else if (n >= e.settle_n) {
                certifiable = false;
                v.notes.push_back("excluded crossing at n=" + std::to_string(n) +
                                  " persists into the periodic regime; cannot certify");
            } else {
                v.notes.push_back("crossing at n=" + std::to_string(n) +
                                  " lies entirely inside the excluded region");
            }
        }
    }

    if (bound < needed) {
        v.status = VerifyStatus::Inconclusive;
        v.bound_reached = true;
        v.notes.push_back("bound " + std::to_string(bound) +
                          " reached before outcome cycle at n=" + std::to_string(needed));
        return v;
    }
    v.status = certifiable ? VerifyStatus::Verified : VerifyStatus::Inconclusive;
    return v;
}

}  // namespace hsforce
