#pragma once

// Codes of the star family.  For q = m/n in (0,1/2) the code has length
// n+1 and symbol i records whether the open window (m(i-1), m(i+1))
// contains a multiple kn, k = 0..m.  Because 2m < n, each window contains
// at most one such multiple.

#include <cassert>

#include "rational.hpp"
#include "tailseq.hpp"
#include "word.hpp"

namespace hsforce {

inline Word nbt_code(const Rational& q) {
    const long m = q.m, n = q.n;
    std::string s;
    s.reserve(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        const long lo = m * (i - 1), hi = m * (i + 1);
        int crossings = 0;
        for (long k = 0; k <= m; ++k)
            if (lo < k * n && k * n < hi) ++crossings;
        assert(crossings <= 1);
        s.push_back(crossings ? '1' : '0');
    }
    return Word(std::move(s));
}

// The periodic sequence (c_q 0)^inf.
inline TailSeq star_tail(const Rational& q) {
    return TailSeq(Word(), nbt_code(q) + Word("0"));
}

// The forward sequence of the star anchor: c_q followed by zeros.
inline TailSeq star_forward(const Rational& q) {
    return TailSeq(nbt_code(q), Word("0"));
}

// Parameter order via code order: q <= q' iff (c_q 0)^inf >=1 (c_q' 0)^inf.
inline bool hall_leq(const Rational& a, const Rational& b) {
    return ge1(star_tail(a), star_tail(b));
}

}  // namespace hsforce
