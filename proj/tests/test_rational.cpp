#include <cstdint>
#include <sstream>

#include "doctest.h"
#include "roughlim/rational.hpp"

using namespace roughlim;

TEST_SUITE("rational") {

TEST_CASE("construction reduces to canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, 4).numerator() == 1);
    CHECK(Rational(2, 4).denominator() == 2);
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational(6, 3) == Rational(2));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 3) == Rational(3, 2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK(Rational(1) + Rational(1, 2) == Rational(3, 2));
    Rational acc(0);
    for (int i = 0; i < 6; ++i) acc += Rational(1, 6);
    CHECK(acc == Rational(1));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("compound assignment") {
    Rational r(1, 2);
    r += Rational(1, 3);
    CHECK(r == Rational(5, 6));
    r -= Rational(1, 3);
    CHECK(r == Rational(1, 2));
    r *= Rational(4);
    CHECK(r == Rational(2));
    r /= Rational(3);
    CHECK(r == Rational(2, 3));
}

TEST_CASE("ordering uses exact cross multiplication") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(7, 6) > Rational(1));
    // Large cross products would overflow a 64-bit multiply; the comparison
    // must still be exact.
    const Rational big_a(INT64_MAX / 2, INT64_MAX / 2 - 1);
    const Rational big_b(INT64_MAX / 2 + 1, INT64_MAX / 2);
    CHECK(big_a > big_b);
    CHECK(min(Rational(1, 2), Rational(1, 3)) == Rational(1, 3));
    CHECK(max(Rational(1, 2), Rational(1, 3)) == Rational(1, 2));
    CHECK(abs(Rational(-5, 7)) == Rational(5, 7));
    CHECK(abs(Rational(5, 7)) == Rational(5, 7));
}

TEST_CASE("sign helpers") {
    CHECK(Rational(0).is_zero());
    CHECK_FALSE(Rational(1, 9).is_zero());
    CHECK(Rational(1, 9).is_positive());
    CHECK(Rational(-1, 9).is_negative());
    CHECK(Rational(-3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(3).sign() == 1);
}

TEST_CASE("overflow is detected, never wrapped") {
    const Rational huge(INT64_MAX, 1);
    CHECK_THROWS_AS(huge + huge, OverflowError);
    CHECK_THROWS_AS(huge * Rational(2), OverflowError);
    // Reduction may rescue large intermediates.
    CHECK(Rational(INT64_MAX, 2) * Rational(2, INT64_MAX) == Rational(1));
}

TEST_CASE("parse accepts p, -p, p/q only") {
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("11/6") == Rational(11, 6));

    CHECK_THROWS_AS(Rational::parse(""), DomainError);
    CHECK_THROWS_AS(Rational::parse("0.5"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1e3"), DomainError);
    CHECK_THROWS_AS(Rational::parse("a/b"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/"), DomainError);
    CHECK_THROWS_AS(Rational::parse("/2"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), DomainError);
    CHECK_THROWS_AS(Rational::parse(" 1"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1 "), DomainError);
    CHECK_THROWS_AS(Rational::parse("+1"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("99999999999999999999"), OverflowError);
}

TEST_CASE("str round-trips through parse") {
    const Rational values[] = {Rational(0),     Rational(5),      Rational(-5),
                               Rational(1, 2),  Rational(-1, 2),  Rational(11, 6),
                               Rational(7, 13), Rational(-22, 7), Rational(INT64_MAX)};
    for (const Rational& v : values) {
        CHECK(Rational::parse(v.str()) == v);
    }
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(2).str() == "2");
    CHECK(Rational(-11, 6).str() == "-11/6");
    std::ostringstream os;
    os << Rational(5, 6);
    CHECK(os.str() == "5/6");
}

TEST_CASE("default and implicit integer construction") {
    CHECK(Rational() == Rational(0));
    const Rational from_int = 7;
    CHECK(from_int == Rational(7, 1));
}

} // TEST_SUITE
