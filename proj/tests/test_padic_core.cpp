#include <catch2/catch_amalgamated.hpp>

#include "padlab/padlab.hpp"

using namespace padlab;

TEST_CASE("valuation of residues") {
    Context c34(3, 4, 1);
    CHECK(Scalar(c34, 18).valuation() == 2);
    CHECK(Scalar(c34, 0).valuation() == 4);
    Context c25(2, 5, 1);
    CHECK(Scalar(c25, 24).valuation() == 3);
}

TEST_CASE("context construction rejects bad parameters") {
    CHECK_THROWS_AS(Context(4, 2, 1), non_prime);
    CHECK_THROWS_AS(Context(1, 2, 1), non_prime);
    CHECK_THROWS_AS(Context(2, 0, 1), invalid_context);
    CHECK_THROWS_AS(Context(2, 40, 1), invalid_context);  // p^N too large
    CHECK_NOTHROW(Context(101, 2, 3));
}

TEST_CASE("scalar ring arithmetic") {
    Context c(3, 2, 1);
    CHECK(unit_inverse(Scalar(c, 2)).residue() == 5);
    CHECK((Scalar(c, 4) + Scalar(c, 5)).residue() == 0);
    CHECK((Scalar(c, 3) * Scalar(c, 3)).residue() == 0);
    CHECK_THROWS_AS(unit_inverse(Scalar(c, 3)), non_unit);
    // negative and oversized inputs reduce at construction
    CHECK(Scalar(c, -1).residue() == 8);
    CHECK(Scalar(c, 90).residue() == 0);
}

TEST_CASE("vector distance") {
    Context c3(3, 4, 2);
    CHECK(distance(Vector(c3, {1, 0}), Vector(c3, {1, 9})) == Distance::pow_neg(2));
    CHECK(distance(Vector(c3, {1, 0}), Vector(c3, {1, 0})).is_below());
    Context c2(2, 3, 2);
    CHECK(distance(Vector(c2, {1, 2}), Vector(c2, {3, 2})) == Distance::pow_neg(1));
}

TEST_CASE("cross-context operations are rejected") {
    Context a(2, 2, 2), b(3, 2, 2);
    CHECK_THROWS_AS(distance(Vector(a, {1, 0}), Vector(b, {1, 0})), context_mismatch);
    CHECK_THROWS_AS(Scalar(a, 1) + Scalar(b, 1), context_mismatch);
}

TEST_CASE("distance order and formatting") {
    CHECK(Distance::below() < Distance::pow_neg(5));
    CHECK(Distance::pow_neg(3) < Distance::pow_neg(1));
    CHECK(Distance::pow_neg(0) == Distance::one());
    CHECK(Distance::below().str() == "0");
    CHECK(Distance::pow_neg(2).str() == "p^-2");
    CHECK(Distance::parse("p^-2") == Distance::pow_neg(2));
    CHECK(Distance::parse("0").is_below());
    CHECK(Distance::parse("1") == Distance::one());
    CHECK_THROWS_AS(Distance::parse("0.5"), precondition_violated);
}
