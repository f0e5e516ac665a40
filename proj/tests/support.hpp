#pragma once

// Shared fixtures for the verifier tests.

#include <hsforce/hsforce.hpp>

namespace fixtures {

// The maximal candidate domain for the decoration "11" before its stable
// boundary is pulled in: x spans from the homoclinic anchor's forward tail
// to 10^inf, but y is levelled at the anchor's own backward tail instead of
// the periodic level (1 w~)^inf.  This domain fails the self-avoidance
// check, which is exactly what motivates the shrunk region_maximal corners.
inline hsforce::Rectangle unshrunk_maximal_rectangle() {
    return hsforce::Rectangle{hsforce::TailSeq::parse("1101(0)"),
                              hsforce::TailSeq::parse("1(0)"),
                              hsforce::TailSeq::parse("01101(0)"),
                              hsforce::TailSeq::parse("101101(0)"),
                              "unshrunk:w=11"};
}

}  // namespace fixtures
