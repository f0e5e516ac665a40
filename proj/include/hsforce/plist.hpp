#pragma once

// Chained star decorations.  A list (q_1 .. q_n) of parameters describes
// the decoration w = c_{q_1} 0 c_{q_2} 0 ... 0 c_{q_n}; its orbit forces a
// union of rectangles, one per link of the "limiting chain" computed below.
// Lists whose chain skips over a point that could itself anchor a link are
// rejected (not order-realizable as a single family); see limiting_structure.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nbt.hpp"
#include "rational.hpp"
#include "region.hpp"
#include "tailseq.hpp"
#include "word.hpp"

namespace hsforce {

// How the finite block list is completed to one-sided sequences when
// comparing chain points: ZeroPad ends with the homoclinic bridge 01 0^inf,
// PeriodicPad continues with the outermost code repeated periodically.
enum class CompletionMode { ZeroPad, PeriodicPad };

namespace detail {

inline Word plist_codes_join(const std::vector<Word>& codes, std::size_t first,
                             std::size_t last) {
    // codes[first..last] joined with single-0 separators (1-based, inclusive)
    Word u;
    for (std::size_t t = first; t <= last; ++t) {
        if (t > first) u = u + Word("0");
        u = u + codes[t - 1];
    }
    return u;
}

}  // namespace detail

struct PListCompletions {
    // 1-based: X[i], Y[i] for i = 1..n+1; index 0 is an unused placeholder.
    std::vector<TailSeq> X, Y;
};

// X_i completes the tail c_{q_i} 0 ... 0 c_{q_n} of the decoration to the
// right, Y_i completes the head up to c_{q_(i-1)} to the left (read
// backwards; the codes are palindromes, so they appear unreversed).
// X_{n+1} and Y_{n+1} complete the empty tail / full head.
inline PListCompletions plist_completions(const std::vector<Rational>& qs,
                                          CompletionMode mode) {
    const std::size_t n = qs.size();
    if (n == 0) throw std::invalid_argument("parameter list must be non-empty");
    std::vector<Word> codes;
    codes.reserve(n);
    for (const auto& q : qs) codes.push_back(nbt_code(q));

    PListCompletions out;
    out.X.assign(n + 2, zeros());
    out.Y.assign(n + 2, zeros());
    for (std::size_t i = 1; i <= n; ++i) {
        const Word tail = detail::plist_codes_join(codes, i, n);
        if (mode == CompletionMode::ZeroPad)
            out.X[i] = TailSeq(tail + Word("01"), Word("0"));
        else
            out.X[i] = TailSeq(tail + Word("0"), codes[n - 1] + Word("0"));
    }
    out.X[n + 1] = TailSeq(Word("1"), Word("0"));
    for (std::size_t i = 1; i <= n + 1; ++i) {
        Word head("0");
        for (std::size_t t = i - 1; t >= 1; --t) head = head + codes[t - 1] + Word("0");
        if (mode == CompletionMode::ZeroPad)
            out.Y[i] = TailSeq(head + Word("1"), Word("0"));
        else
            out.Y[i] = TailSeq(head, codes[0] + Word("0"));
    }
    return out;
}

struct PListAnalysis {
    PListCompletions comp;
    std::vector<std::size_t> chain;     // 1 = first point, ends with the sentinel n+1
    std::vector<std::size_t> limiting;  // chain without the sentinel
    bool is_plist = false;
    std::optional<std::size_t> violation_at;  // skipped point that had a link of its own
};

namespace detail {

// Candidate link (i, j) is blocked when some interior point k dominates it
// (further right and further up), or when the full-head completion already
// lies above Y_j.  The first point never blocks: its head completion is the
// open top edge.
inline bool plist_link_blocked(const PListCompletions& c, std::size_t n, std::size_t i,
                               std::size_t j) {
    for (std::size_t k = 2; k <= n; ++k)
        if (gt1(c.X[k], c.X[i]) && gt1(c.Y[k], c.Y[j])) return true;
    return gt1(c.Y[n + 1], c.Y[j]);
}

// The unique j in (i, n] with X_j above X_i and (i, j) unblocked, if any.
// Ties (which do not occur for valid inputs) resolve to the lowest X_j.
inline std::optional<std::size_t> plist_successor(const PListCompletions& c, std::size_t n,
                                                  std::size_t i) {
    std::optional<std::size_t> best;
    for (std::size_t j = i + 1; j <= n; ++j) {
        if (!gt1(c.X[j], c.X[i]) || plist_link_blocked(c, n, i, j)) continue;
        if (!best || lt1(c.X[j], c.X[*best])) best = j;
    }
    return best;
}

}  // namespace detail

inline PListAnalysis limiting_structure(const std::vector<Rational>& qs,
                                        CompletionMode mode = CompletionMode::ZeroPad) {
    const std::size_t n = qs.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (qs[i] == qs[j])
                throw std::invalid_argument("parameters must be pairwise distinct: " +
                                            qs[i].str() + " repeats");
    PListAnalysis a{plist_completions(qs, mode), {}, {}, true, std::nullopt};

    std::size_t i = 1;
    a.chain.push_back(1);
    while (i <= n) {
        const auto j = detail::plist_successor(a.comp, n, i);
        const std::size_t next = j.value_or(n + 1);
        // every point strictly inside the link must itself be linkless
        for (std::size_t k = i + 1; k < next && a.is_plist; ++k)
            if (detail::plist_successor(a.comp, n, k)) {
                a.is_plist = false;
                a.violation_at = k;
            }
        a.chain.push_back(next);
        i = next;
    }
    a.limiting.assign(a.chain.begin(), a.chain.end() - 1);
    return a;
}

inline bool is_plist(const std::vector<Rational>& qs,
                     CompletionMode mode = CompletionMode::ZeroPad) {
    return limiting_structure(qs, mode).is_plist;
}

// Pruning region of a chained decoration: one rectangle per chain link
// (i, j), anchored on the periodic orbit (u 1)^inf where u joins blocks
// i..j-1.  x runs from the right completion X_i to 10^inf; y between the
// anchor's backward tail (1 u~)^inf and its downward neighbour 0 u~ (1 u~)^inf.
inline PruningRegion region_plist(const std::vector<Rational>& qs,
                                  CompletionMode mode = CompletionMode::ZeroPad) {
    const std::size_t n = qs.size();
    const PListAnalysis a = limiting_structure(qs, mode);
    if (!a.is_plist) {
        std::string list;
        for (std::size_t t = 0; t < qs.size(); ++t)
            list += (t ? "," : "") + qs[t].str();
        throw std::invalid_argument("not a valid parameter list [" + list +
                                    "]: point C" + std::to_string(*a.violation_at) +
                                    " is skipped by the chain but has a link of its own");
    }
    std::vector<Word> codes;
    codes.reserve(n);
    for (const auto& q : qs) codes.push_back(nbt_code(q));

    PruningRegion region;
    for (std::size_t t = 0; t + 1 < a.chain.size(); ++t) {
        const std::size_t i = a.chain[t], j = a.chain[t + 1];
        const Word u = detail::plist_codes_join(codes, i, j - 1);
        const Word ur = word_reverse(u);
        TailSeq level_a(Word(), Word("1") + ur);
        TailSeq level_b = level_a.prepend(Word("0") + ur);
        region.push_back(detail::make_rect(
            a.comp.X[i], TailSeq(Word("1"), Word("0")), std::move(level_a),
            std::move(level_b),
            "plist:C" + std::to_string(i) + "->C" + std::to_string(j) + ":T=(" +
                (u + Word("1")).str() + ")"));
    }
    return region;
}

}  // namespace hsforce
