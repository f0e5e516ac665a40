#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <vector>

#include <hsforce/nbt.hpp>

using namespace hsforce;

namespace {

// All reduced fractions m/n in (0, 1/2) with denominator <= max_den.
std::vector<Rational> fractions_up_to(long max_den) {
    std::vector<Rational> qs;
    for (long n = 3; n <= max_den; ++n)
        for (long m = 1; 2 * m < n; ++m)
            if (std::gcd(m, n) == 1) qs.push_back(Rational{m, n});
    return qs;
}

// 1 0^{a_1} 11 0^{a_2} 11 ... 11 0^{a_m} 1 with a_i >= 0: single 1s at the
// ends, interior blocks of 11 that merge into even runs when an a_i is 0.
bool shape_valid(const Word& c) {
    if (c.size() < 3 || c[0] != '1' || c.back() != '1') return false;
    std::vector<std::size_t> one_runs, zero_runs;
    for (std::size_t i = 0; i < c.size();) {
        std::size_t j = i;
        while (j < c.size() && c[j] == c[i]) ++j;
        (c[i] == '1' ? one_runs : zero_runs).push_back(j - i);
        i = j;
    }
    if (one_runs.size() < 2 || zero_runs.size() != one_runs.size() - 1) return false;
    if (one_runs.front() != 1 || one_runs.back() != 1) return false;
    for (std::size_t k = 1; k + 1 < one_runs.size(); ++k)
        if (one_runs[k] % 2 != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("rational validation") {
    CHECK(Rational::parse("2/7").str() == "2/7");
    CHECK(Rational::parse("2/8").str() == "1/4");  // reduced before range check
    CHECK(Rational(2, 8) == Rational(1, 4));
    CHECK_THROWS_AS(Rational::parse("3/6"), std::invalid_argument);  // = 1/2
    CHECK_THROWS_AS(Rational::parse("0/5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("5/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("2-7"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("2/7x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK(Rational(2, 7) < Rational(1, 3));
    CHECK(Rational(1, 3) <= Rational(2, 5));
}

TEST_CASE("code golden values") {
    CHECK(nbt_code(Rational(2, 7)).str() == "10011001");
    CHECK(nbt_code(Rational(1, 3)).str() == "1001");
    CHECK(nbt_code(Rational(2, 5)).str() == "101101");
    CHECK(nbt_code(Rational(1, 4)).str() == "10001");
    // Adjacent interior blocks merge when a zero gap is empty.
    CHECK(nbt_code(Rational(3, 7)).str() == "10111101");
}

TEST_CASE("code invariants for all denominators up to 200") {
    for (const Rational& q : fractions_up_to(200)) {
        const Word c = nbt_code(q);
        REQUIRE(c.size() == static_cast<std::size_t>(q.n + 1));
        CHECK(is_palindrome(c));
        CHECK(ones_count(c) == static_cast<std::size_t>(2 * q.m));
        CHECK(shape_valid(c));
    }
}

TEST_CASE("code order realizes the rational order") {
    const auto qs = fractions_up_to(30);
    for (std::size_t i = 0; i < qs.size(); ++i)
        for (std::size_t j = 0; j < qs.size(); ++j) {
            if (qs[i] < qs[j])
                CHECK(cmp_unimodal(star_tail(qs[i]), star_tail(qs[j])) == Ordering::GT);
            CHECK(hall_leq(qs[i], qs[j]) == (ge1(star_tail(qs[i]), star_tail(qs[j]))));
        }
}

TEST_CASE("star sequences") {
    CHECK(star_tail(Rational(2, 7)) == TailSeq::parse("(100110010)"));
    CHECK(star_tail(Rational(1, 3)) == TailSeq::parse("(10010)"));
    CHECK(star_forward(Rational(2, 7)) == TailSeq::parse("10011001(0)"));
}
