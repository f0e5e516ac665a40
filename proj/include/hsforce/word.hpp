#pragma once

// Finite binary words over the alphabet {0,1}.

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hsforce {

enum class Parity { Even, Odd };

inline Parity operator^(Parity a, Parity b) {
    return a == b ? Parity::Even : Parity::Odd;
}

// A finite (possibly empty) word over {0,1}, stored as '0'/'1' characters.
class Word {
public:
    Word() = default;

    explicit Word(std::string bits) : bits_(std::move(bits)) {
        for (char c : bits_) {
            if (c != '0' && c != '1')
                throw std::invalid_argument(std::string("word symbol must be 0 or 1, got '") + c + "'");
        }
    }

    static Word parse(std::string_view text) { return Word(std::string(text)); }

    const std::string& str() const { return bits_; }
    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    char operator[](std::size_t i) const { return bits_[i]; }
    bool bit(std::size_t i) const { return bits_[i] == '1'; }
    char back() const { return bits_.back(); }

    friend bool operator==(const Word&, const Word&) = default;
    friend bool operator<(const Word& a, const Word& b) { return a.bits_ < b.bits_; }

    friend Word operator+(const Word& a, const Word& b) { return Word(a.bits_ + b.bits_); }

private:
    std::string bits_;
};

inline Parity word_parity(const Word& w) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < w.size(); ++i) ones += w.bit(i);
    return (ones % 2 == 0) ? Parity::Even : Parity::Odd;
}

inline std::size_t ones_count(const Word& w) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < w.size(); ++i) ones += w.bit(i);
    return ones;
}

inline Word word_reverse(const Word& w) {
    return Word(std::string(w.str().rbegin(), w.str().rend()));
}

inline bool is_palindrome(const Word& w) { return w == word_reverse(w); }

// Left rotation by k: w[k..] w[0..k).
inline Word rotate_left(const Word& w, std::size_t k) {
    if (w.empty()) return w;
    k %= w.size();
    return Word(w.str().substr(k) + w.str().substr(0, k));
}

// Shortest word z with w = z^k. Returns w itself when w is primitive.
inline Word primitive_root(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool repeats = true;
        for (std::size_t i = d; i < n && repeats; ++i)
            repeats = w[i] == w[i - d];
        if (repeats) return Word(w.str().substr(0, d));
    }
    return w;
}

inline bool is_primitive(const Word& w) {
    return !w.empty() && primitive_root(w).size() == w.size();
}

}  // namespace hsforce
