#include <doctest.h>

#include <limits>
#include <stdexcept>

#include <gmpxx.h>

#include "slopelab/rational.hpp"

using slopelab::Rational;

TEST_SUITE("rational") {

TEST_CASE("normalization and printing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(-7, 2).str() == "-7/2");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("ordering is exact near equal fractions") {
    // 1/(p+1) vs slope/(k-1) at the exceptional boundary, p = 59, k = 16.
    CHECK(Rational(1, 15) > Rational(1, 60));
    CHECK(Rational(1, 60) * Rational(15) == Rational(1, 4));
    const Rational a(999999999989LL, 1000000000000LL);
    const Rational b(999999999988LL, 999999999999LL);
    CHECK(a != b);
    const mpq_class qa(mpz_class("999999999989"), mpz_class("1000000000000"));
    const mpq_class qb(mpz_class("999999999988"), mpz_class("999999999999"));
    CHECK((a < b) == (qa < qb));
    CHECK((b < a) == (qb < qa));
}

TEST_CASE("floor rounds toward negative infinity") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-4, 2).floor() == -2);
}

TEST_CASE("truncated and rounded decimals") {
    CHECK(Rational(1, 15).truncated_decimal(3) == "0.066");
    CHECK(Rational(1, 15).rounded_decimal(3) == "0.067");
    CHECK(Rational(2, 3).truncated_decimal(3) == "0.666");
    CHECK(Rational(1).truncated_decimal(3) == "1.000");
    CHECK(Rational(0).truncated_decimal(2) == "0.00");
    // ties to even
    CHECK(Rational(1, 8).rounded_decimal(2) == "0.12");
    CHECK(Rational(3, 8).rounded_decimal(2) == "0.38");
}

TEST_CASE("overflow is reported") {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big * big, std::overflow_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

}
