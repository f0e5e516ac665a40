#pragma once

// Eventually periodic one-sided binary sequences ("tail sequences") and the
// unimodal order on them.  A sequence is stored in the canonical form
// preperiod + primitive period; text grammar is "pre(per)", e.g. "01(10)".

#include <cassert>
#include <cstdint>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "word.hpp"

namespace hsforce {

enum class Ordering { LT, EQ, GT };

inline Ordering flip(Ordering o) {
    if (o == Ordering::LT) return Ordering::GT;
    if (o == Ordering::GT) return Ordering::LT;
    return Ordering::EQ;
}

class TailSeq {
public:
    // Canonicalizes on construction: the period is reduced to its primitive
    // root, then trailing preperiod symbols equal to the (rotated) period's
    // last symbol are absorbed into the period.  The result is the unique
    // representation with primitive period and minimal preperiod.
    TailSeq(Word pre, Word per) : pre_(std::move(pre)), per_(primitive_root(per)) {
        if (per_.empty())
            throw std::invalid_argument("tail sequence needs a non-empty period");
        while (!pre_.empty() && pre_.back() == per_.back()) {
            // u c (v c)^inf == u (c v)^inf, so move the shared symbol into a
            // right-rotated period.  Rotation preserves primitivity.
            per_ = Word(std::string(1, per_.back()) + per_.str().substr(0, per_.size() - 1));
            pre_ = Word(pre_.str().substr(0, pre_.size() - 1));
        }
    }

    // Grammar: pre "(" per ")", both parts over {0,1}, per non-empty.
    static TailSeq parse(std::string_view text) {
        const auto open = text.find('(');
        if (open == std::string_view::npos || text.back() != ')')
            throw std::invalid_argument("tail sequence must look like pre(per): " + std::string(text));
        std::string pre(text.substr(0, open));
        std::string per(text.substr(open + 1, text.size() - open - 2));
        if (per.empty())
            throw std::invalid_argument("tail sequence period must be non-empty: " + std::string(text));
        if (per.find_first_of("()") != std::string::npos || pre.find_first_of("()") != std::string::npos)
            throw std::invalid_argument("malformed tail sequence: " + std::string(text));
        return TailSeq(Word(std::move(pre)), Word(std::move(per)));
    }

    const Word& preperiod() const { return pre_; }
    const Word& period() const { return per_; }

    std::string str() const { return pre_.str() + "(" + per_.str() + ")"; }

    char sym(std::size_t i) const {
        return i < pre_.size() ? pre_[i] : per_[(i - pre_.size()) % per_.size()];
    }
    bool at(std::size_t i) const { return sym(i) == '1'; }

    // First `len` symbols as a word.
    Word prefix(std::size_t len) const {
        std::string s;
        s.reserve(len);
        for (std::size_t i = 0; i < len; ++i) s.push_back(sym(i));
        return Word(std::move(s));
    }

    std::size_t description_size() const { return pre_.size() + per_.size(); }

    // sigma^k: drop the first k symbols.
    TailSeq drop_front(std::size_t k) const {
        if (k <= pre_.size())
            return TailSeq(Word(pre_.str().substr(k)), per_);
        return TailSeq(Word(), rotate_left(per_, (k - pre_.size()) % per_.size()));
    }

    TailSeq prepend(const Word& v) const { return TailSeq(v + pre_, per_); }

    friend bool operator==(const TailSeq&, const TailSeq&) = default;

private:
    Word pre_, per_;
};

inline TailSeq zeros() { return TailSeq(Word(), Word("0")); }

namespace detail {

// Any two distinct eventually periodic sequences differ within
// max(|pre_a|,|pre_b|) + lcm(|per_a|,|per_b|) symbols: beyond the longer
// preperiod both are lcm-periodic, so agreement on one further lcm-window
// forces agreement everywhere.  This is within the documented bound
// |pre_a| + |pre_b| + lcm(|per_a|, |per_b|).
inline std::size_t compare_horizon(const TailSeq& a, const TailSeq& b) {
    return std::max(a.preperiod().size(), b.preperiod().size()) +
           std::lcm(a.period().size(), b.period().size());
}

}  // namespace detail

// Index of the first differing symbol.  Precondition: a != b.
inline std::size_t first_difference(const TailSeq& a, const TailSeq& b) {
    const std::size_t horizon = detail::compare_horizon(a, b);
    for (std::size_t i = 0; i < horizon; ++i)
        if (a.sym(i) != b.sym(i)) return i;
    throw std::logic_error("first_difference called on equal sequences");
}

// The unimodal order: at the first differing index, the sequence with the
// larger symbol is greater when the common prefix has an even number of
// ones, smaller when odd.  Total order; EQ exactly on canonical equality.
inline Ordering cmp_unimodal(const TailSeq& a, const TailSeq& b) {
    if (a == b) return Ordering::EQ;
    const std::size_t horizon = detail::compare_horizon(a, b);
    bool odd = false;
    for (std::size_t i = 0; i < horizon; ++i) {
        const bool sa = a.at(i), sb = b.at(i);
        if (sa != sb) {
            const bool a_greater = odd ? !sa : sa;
            return a_greater ? Ordering::GT : Ordering::LT;
        }
        odd ^= sa;
    }
    throw std::logic_error("distinct canonical sequences must differ within the horizon");
}

inline bool lt1(const TailSeq& a, const TailSeq& b) { return cmp_unimodal(a, b) == Ordering::LT; }
inline bool gt1(const TailSeq& a, const TailSeq& b) { return cmp_unimodal(a, b) == Ordering::GT; }
inline bool le1(const TailSeq& a, const TailSeq& b) { return cmp_unimodal(a, b) != Ordering::GT; }
inline bool ge1(const TailSeq& a, const TailSeq& b) { return cmp_unimodal(a, b) != Ordering::LT; }

inline const TailSeq& min1(const TailSeq& a, const TailSeq& b) { return lt1(b, a) ? b : a; }
inline const TailSeq& max1(const TailSeq& a, const TailSeq& b) { return lt1(b, a) ? a : b; }

// Parity of the first `len` symbols.
inline Parity prefix_parity(const TailSeq& s, std::size_t len) {
    bool odd = false;
    for (std::size_t i = 0; i < len; ++i) odd ^= s.at(i);
    return odd ? Parity::Odd : Parity::Even;
}

// Dyadic rational num / 2^depth.
struct Dyadic {
    std::uint64_t num = 0;
    int depth = 0;
    double value() const { return std::ldexp(static_cast<double>(num), -depth); }
    friend bool operator==(const Dyadic&, const Dyadic&) = default;
};

// Order-preserving embedding into [0,1]: bit i of the expansion is the
// cumulative parity of s_0..s_i.  Two sequences first differing at index d
// compare strictly whenever depth > d.
inline Dyadic embed_coordinate(const TailSeq& s, int depth) {
    if (depth < 1 || depth > 64)
        throw std::invalid_argument("embed depth must lie in [1,64]");
    std::uint64_t num = 0;
    bool odd = false;
    for (int i = 0; i < depth; ++i) {
        odd ^= s.at(static_cast<std::size_t>(i));
        num = (num << 1) | static_cast<std::uint64_t>(odd);
    }
    return Dyadic{num, depth};
}

namespace detail {

// Cumulative-parity bit of s_0..s_i.  The map s -> (eps_i) is a bijection
// onto {0,1}-streams and turns the unimodal order into the lexicographic
// order, which is what between() exploits.
inline bool eps_at(const TailSeq& s, std::size_t i) {
    return prefix_parity(s, i + 1) == Parity::Odd;
}

// Rebuild a sequence from an eps-stream of the form bits + 1 + 0^inf, where
// `bits` are eps-values of s below index k.
inline TailSeq from_eps_spike(const TailSeq& src, std::size_t k) {
    std::string out;
    out.reserve(k + 2);
    bool prev = false;
    for (std::size_t i = 0; i < k; ++i) {
        const bool e = eps_at(src, i);
        out.push_back((e != prev) ? '1' : '0');
        prev = e;
    }
    out.push_back(prev ? '0' : '1');  // eps jumps to 1 at k
    out.push_back('1');               // eps falls back to 0 at k+1
    return TailSeq(Word(std::move(out)), Word("0"));
}

}  // namespace detail

// A sequence strictly between a and b in the unimodal order, when one
// exists.  Returns nullopt exactly for adjacent pairs (eps-streams of the
// shape p01^inf / p10^inf, which bound an empty open interval).
inline std::optional<TailSeq> between(const TailSeq& a, const TailSeq& b) {
    const Ordering ord = cmp_unimodal(a, b);
    if (ord == Ordering::EQ) return std::nullopt;
    const TailSeq& lo = ord == Ordering::LT ? a : b;
    const TailSeq& hi = ord == Ordering::LT ? b : a;
    const std::size_t d = first_difference(lo, hi);
    // eps(lo) < eps(hi) lexicographically with eps(lo)_d = 0, eps(hi)_d = 1.
    // If eps(lo) has a 0 after d, raising it to 1 and zeroing the tail stays
    // below eps(hi) (still differs at d) and above eps(lo).
    const std::size_t scan_lo = d + 1 + lo.preperiod().size() + 2 * lo.period().size() + 1;
    for (std::size_t k = d + 1; k <= scan_lo; ++k)
        if (!detail::eps_at(lo, k)) return detail::from_eps_spike(lo, k);
    // eps(lo) is all ones after d.  Any point strictly below eps(hi) with
    // prefix eps(hi)[0..d] works; it exists iff eps(hi) has a 1 after d.
    const std::size_t scan_hi = d + 1 + hi.preperiod().size() + 2 * hi.period().size() + 1;
    for (std::size_t k = d + 1; k <= scan_hi; ++k)
        if (detail::eps_at(hi, k)) return detail::from_eps_spike(hi, d);
    return std::nullopt;  // adjacent: eps(lo) = p01^inf, eps(hi) = p10^inf
}

// Index of a rotation r of w with (r)^inf >1 (w)^inf, if any.
inline std::optional<std::size_t> shift_maximal_violation(const Word& w) {
    if (w.empty())
        throw std::invalid_argument("shift-maximality is undefined for the empty word");
    const TailSeq self(Word(), w);
    for (std::size_t i = 1; i < w.size(); ++i)
        if (gt1(TailSeq(Word(), rotate_left(w, i)), self)) return i;
    return std::nullopt;
}

// True iff every rotation r of w satisfies (r)^inf <=1 (w)^inf.
inline bool is_shift_maximal(const Word& w) {
    return !shift_maximal_violation(w).has_value();
}

}  // namespace hsforce
