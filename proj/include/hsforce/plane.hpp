#pragma once

// Points of the two-sided shift, split at the binary point.  A point
// ... s(-2) s(-1) . s(0) s(1) ... is stored as the pair
//   forward  = s(0) s(1) s(2) ...
//   backward = s(-1) s(-2) s(-3) ...
// The horizontal coordinate is ordered by the unimodal order on `forward`,
// the vertical one by the unimodal order on `backward`.

#include <cstdlib>

#include "tailseq.hpp"

namespace hsforce {

struct PlanePoint {
    TailSeq forward;
    TailSeq backward;

    friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

// One application of the shift: the binary point moves one symbol right.
inline PlanePoint shift_once(const PlanePoint& p) {
    const Word head(std::string(1, p.forward.sym(0)));
    return PlanePoint{p.forward.drop_front(1), p.backward.prepend(head)};
}

inline PlanePoint unshift_once(const PlanePoint& p) {
    const Word head(std::string(1, p.backward.sym(0)));
    return PlanePoint{p.forward.prepend(head), p.backward.drop_front(1)};
}

inline PlanePoint shift_point(PlanePoint p, long k) {
    for (; k > 0; --k) p = shift_once(p);
    for (; k < 0; ++k) p = unshift_once(p);
    return p;
}

}  // namespace hsforce
