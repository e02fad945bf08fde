#include "helpers.hpp"

#include <doctest.h>

using namespace testing;

TEST_SUITE("scalars") {

TEST_CASE("rationals stay in lowest terms") {
    Rational a(6, -4);
    CHECK(a.str() == "-3/2");
    CHECK((a + Rational(3, 2)).is_zero());
    CHECK((a * Rational(-2, 3)).is_one());
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational().inverse(), std::domain_error);
}

TEST_CASE("int64 overflow falls back to GMP and comes back") {
    Rational big(1LL << 62);
    Rational sq = big * big;  // 2^124
    CHECK(sq.str() == "21267647932558653966460912964485513216");
    Rational back = sq / big;
    CHECK(back == big);
    CHECK((back - big).is_zero());
    Rational tiny(1, 1LL << 62);
    CHECK((tiny * tiny * sq).is_one());
    CHECK(Rational(std::numeric_limits<long long>::min()).abs().str() == "9223372036854775808");
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(5) > Rational(9, 2));
}

TEST_CASE("quadratic extension arithmetic") {
    Scalar r2 = Scalar::sqrt_of(Rational(2));
    CHECK(r2.d() == 2);
    CHECK(r2 * r2 == Scalar(2));
    Scalar x = Scalar(1) + r2;  // 1 + √2
    CHECK(x * x.conjugate() == Scalar(-1));
    CHECK(x.norm() == Rational(-1));
    CHECK(x * x.inverse() == Scalar(1));
    CHECK(x.sign() > 0);
    CHECK((Scalar(1) - r2).sign() < 0);
    CHECK(Scalar::sqrt_of(Rational(8)) == r2 * Scalar(2));
    CHECK(Scalar::sqrt_of(Rational(9, 4)) == Scalar(Rational(3, 2)));
    CHECK(Scalar::sqrt_of(Rational(9, 4)).is_rational());
}

TEST_CASE("mixing quadratic fields throws") {
    Scalar r2 = Scalar::sqrt_of(Rational(2)), r3 = Scalar::sqrt_of(Rational(3));
    CHECK_THROWS_AS(r2 + r3, FieldMismatch);
    CHECK_NOTHROW(r2 + Scalar(5));
    CHECK_THROWS_AS(r2.rational(), std::logic_error);
}

}
