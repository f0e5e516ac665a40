#include <catch2/catch_amalgamated.hpp>

#include <hsforce/plist.hpp>
#include <hsforce/region.hpp>
#include <hsforce/verify.hpp>

#include "support.hpp"

using namespace hsforce;

TEST_CASE("star and decorated rectangles verify") {
    CHECK(verify_pruning_domain(region_star(Rational(2, 7))[0], {}, 64).status ==
          VerifyStatus::Verified);
    CHECK(verify_pruning_domain(region_star(Rational(2, 5))[0], {}, 64).status ==
          VerifyStatus::Verified);
    CHECK(verify_pruning_domain(region_maximal(Word("11"))[0], {}, 64).status ==
          VerifyStatus::Verified);
    CHECK(verify_pruning_domain(region_maximal(Word("1"))[0], {}, 64).status ==
          VerifyStatus::Verified);
}

TEST_CASE("chained region rectangles verify with earlier rectangles excluded") {
    const auto region = region_plist({Rational(2, 5), Rational(2, 7), Rational(1, 3)});
    REQUIRE(region.size() == 2);
    const Verdict first = verify_pruning_domain(region[0], {}, 256);
    CHECK(first.status == VerifyStatus::Verified);
    CHECK_FALSE(first.bound_reached);
    // The second rectangle is only a pruning domain relative to the first:
    // its boundary images may cross it inside the already-pruned part.
    const Verdict second = verify_pruning_domain(region[1], {region[0]}, 256);
    CHECK(second.status == VerifyStatus::Verified);
}

TEST_CASE("an over-wide rectangle is refuted with a witness") {
    const Rectangle r = fixtures::unshrunk_maximal_rectangle();
    const Verdict v = verify_pruning_domain(r, {}, 256);
    REQUIRE(v.status == VerifyStatus::Violated);
    REQUIRE(v.n.has_value());
    CHECK(*v.n == 1);
    REQUIRE(v.side.has_value());
    CHECK(*v.side == Side::Stable);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->forward == TailSeq::parse("101(0)"));
    CHECK(v.witness->backward == TailSeq::parse("1101101(0)"));
    // The witness really does lie inside the open rectangle.
    CHECK(rect_contains(r, *v.witness));
}

TEST_CASE("a too-small bound is reported as inconclusive") {
    const Verdict v = verify_pruning_domain(region_star(Rational(2, 7))[0], {}, 3);
    CHECK(v.status == VerifyStatus::Inconclusive);
    CHECK(v.bound_reached);
    REQUIRE_FALSE(v.notes.empty());
}

TEST_CASE("verification bound must be positive") {
    CHECK_THROWS_AS(verify_pruning_domain(region_star(Rational(2, 7))[0], {}, 0),
                    std::invalid_argument);
}
