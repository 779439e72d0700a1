#include "dlab/rational.hpp"

#include <stdexcept>

#include "doctest.h"
#include "support/test_util.hpp"

using dlab::BigInt;
using dlab::Rational;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, -7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("field arithmetic identities") {
  Rational a(3, 7), b(-5, 11), c(1, 2);
  CHECK(a + b == Rational(3 * 11 - 5 * 7, 77));
  CHECK((a + b) + c == a + (b + c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a - a == Rational(0));
  CHECK(a * a.reciprocal() == Rational(1));
  CHECK((a / b) * b == a);
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("ordering agrees with cross-multiplication on random cases") {
  dlab_test::TestRng rng(0xABCD01);
  for (int i = 0; i < 500; ++i) {
    long long pn = static_cast<long long>(rng.below(2001)) - 1000;
    long long qn = static_cast<long long>(rng.below(2001)) - 1000;
    long long pd = 1 + static_cast<long long>(rng.below(999));
    long long qd = 1 + static_cast<long long>(rng.below(999));
    Rational x(pn, pd), y(qn, qd);
    // cross multiplication with positive denominators is the ground truth
    bool less = pn * qd < qn * pd;
    CHECK((x < y) == less);
    CHECK((x == y) == (pn * qd == qn * pd));
  }
}

TEST_CASE("floor and ceil split at integers") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(6, 2).floor() == 3);
  CHECK(Rational(6, 2).ceil() == 3);
  CHECK(Rational(0).floor() == 0);
}

TEST_CASE("pow2 covers both directions") {
  CHECK(Rational::pow2(0) == Rational(1));
  CHECK(Rational::pow2(10) == Rational(1024));
  CHECK(Rational::pow2(-3) == Rational(1, 8));
  CHECK(Rational::pow2(5) * Rational::pow2(-5) == Rational(1));
}

TEST_CASE("parse round-trips the fraction rendering") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("42") == Rational(42));
  CHECK(Rational::parse("6/8") == Rational(3, 4));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);

  dlab_test::TestRng rng(0xABCD02);
  for (int i = 0; i < 200; ++i) {
    long long n = static_cast<long long>(rng.below(20001)) - 10000;
    long long d = 1 + static_cast<long long>(rng.below(9999));
    Rational x(n, d);
    CHECK(Rational::parse(x.to_fraction_string()) == x);
  }
}

TEST_CASE("fraction rendering is canonical") {
  CHECK(Rational(0).to_fraction_string() == "0/1");
  CHECK(Rational(7).to_fraction_string() == "7/1");
  CHECK(Rational(-3, 4).to_fraction_string() == "-3/4");
  CHECK(Rational(10, 4).to_fraction_string() == "5/2");
}

TEST_CASE("decimal rendering rounds half away from zero at 12 digits") {
  CHECK(Rational(1, 2).to_decimal_string() == "0.5");
  CHECK(Rational(1, 3).to_decimal_string() == "0.333333333333");
  CHECK(Rational(2, 3).to_decimal_string() == "0.666666666667");
  CHECK(Rational(1).to_decimal_string() == "1");
  CHECK(Rational(-1, 8).to_decimal_string() == "-0.125");
  // the 12-digit window of 1/7 = 0.142857142857(14...) truncates here
  CHECK(Rational(1, 7).to_decimal_string() == "0.142857142857");
  // a tie at the last kept digit rounds away from zero: 62.5e-3 -> 63e-3
  CHECK(Rational(1, 16).to_decimal_string(2) == "0.063");
  CHECK(Rational(-1, 16).to_decimal_string(2) == "-0.063");
  // no rounding when the window holds the value exactly
  CHECK(Rational(1, 16).to_decimal_string(3) == "0.0625");
  // far exponents switch to scientific notation
  CHECK(Rational(5, 10000000000000LL).to_decimal_string(1) == "5e-13");
}

TEST_CASE("floor_div and ceil_div handle negatives") {
  CHECK(dlab::floor_div(BigInt(7), BigInt(2)) == 3);
  CHECK(dlab::floor_div(BigInt(-7), BigInt(2)) == -4);
  CHECK(dlab::ceil_div(BigInt(7), BigInt(2)) == 4);
  CHECK(dlab::ceil_div(BigInt(-7), BigInt(2)) == -3);
  CHECK(dlab::floor_div(BigInt(-8), BigInt(2)) == -4);
  CHECK(dlab::ceil_div(BigInt(-8), BigInt(2)) == -4);
}

TEST_CASE("min and max order rationals") {
  CHECK(dlab::min(Rational(1, 3), Rational(1, 4)) == Rational(1, 4));
  CHECK(dlab::max(Rational(-1, 3), Rational(-1, 4)) == Rational(-1, 4));
}
