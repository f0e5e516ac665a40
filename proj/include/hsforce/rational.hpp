#pragma once

// Reduced fractions m/n restricted to the open interval (0, 1/2), the
// parameter range of the star family.

#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hsforce {

struct Rational {
    long m = 0;  // numerator
    long n = 1;  // denominator

    Rational() = default;

    Rational(long num, long den) {
        if (den <= 0) throw std::invalid_argument("denominator must be positive");
        const long g = std::gcd(num, den);
        m = num / g;
        n = den / g;
        if (!(0 < m && 2 * m < n))
            throw std::invalid_argument("fraction must lie strictly between 0 and 1/2: " +
                                        std::to_string(num) + "/" + std::to_string(den));
    }

    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos)
            throw std::invalid_argument("expected m/n: " + std::string(text));
        std::size_t pos_m = 0, pos_n = 0;
        long num = 0, den = 0;
        const std::string ms(text.substr(0, slash));
        const std::string ns(text.substr(slash + 1));
        try {
            num = std::stol(ms, &pos_m);
            den = std::stol(ns, &pos_n);
        } catch (const std::exception&) {
            throw std::invalid_argument("expected m/n: " + std::string(text));
        }
        if (ms.empty() || ns.empty() || pos_m != ms.size() || pos_n != ns.size())
            throw std::invalid_argument("expected m/n: " + std::string(text));
        return Rational(num, den);
    }

    std::string str() const { return std::to_string(m) + "/" + std::to_string(n); }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.m * b.n < b.m * a.n;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
};

}  // namespace hsforce
