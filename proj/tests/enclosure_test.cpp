#include "dlab/enclosure.hpp"

#include <stdexcept>

#include "doctest.h"
#include "support/test_util.hpp"

using dlab::Enclosure;
using dlab::Rational;

namespace {

// A random rational and a random bracket around it.
struct Carried {
  Rational value;
  Enclosure box;
};

Carried random_carried(dlab_test::TestRng& rng) {
  long long num = static_cast<long long>(rng.below(4001)) - 2000;
  long long den = 1 + static_cast<long long>(rng.below(200));
  Rational v(num, den);
  Rational pad_lo(static_cast<long long>(rng.below(100)), 1000);
  Rational pad_hi(static_cast<long long>(rng.below(100)), 1000);
  return {v, Enclosure(v - pad_lo, v + pad_hi)};
}

}  // namespace

TEST_CASE("constructor rejects inverted bounds") {
  CHECK_THROWS_AS(Enclosure(Rational(1), Rational(0)), std::invalid_argument);
  CHECK_NOTHROW(Enclosure(Rational(1, 3), Rational(1, 3)));
}

TEST_CASE("arithmetic preserves containment of carried values") {
  dlab_test::TestRng rng(0xE0C1);
  for (int trial = 0; trial < 300; ++trial) {
    Carried a = random_carried(rng);
    Carried b = random_carried(rng);
    CHECK((a.box + b.box).contains(a.value + b.value));
    CHECK((a.box - b.box).contains(a.value - b.value));
    CHECK((a.box * b.box).contains(a.value * b.value));
    CHECK((-a.box).contains(-a.value));
    CHECK(a.box.square().contains(a.value * a.value));
    CHECK(a.box.abs().contains(a.value.abs()));
    Rational c(static_cast<long long>(rng.below(21)) - 10, 3);
    CHECK(a.box.scale(c).contains(a.value * c));
    if (!c.is_zero()) {
      CHECK(a.box.divide_by(c).contains(a.value / c));
    }
    if (a.box.is_positive() || a.box.is_negative()) {
      CHECK(a.box.reciprocal().contains(a.value.reciprocal()));
    }
    CHECK(Enclosure::hull(a.box, b.box).contains(a.box));
    CHECK(Enclosure::hull(a.box, b.box).contains(b.box));
  }
}

TEST_CASE("square is tight around zero") {
  Enclosure straddle(Rational(-1, 2), Rational(1, 3));
  Enclosure sq = straddle.square();
  CHECK(sq.lo == Rational(0));
  CHECK(sq.hi == Rational(1, 4));
}

TEST_CASE("reciprocal requires a sign") {
  CHECK_THROWS_AS(Enclosure(Rational(-1), Rational(1)).reciprocal(), std::domain_error);
  Enclosure pos(Rational(1, 4), Rational(1, 2));
  CHECK(pos.reciprocal() == Enclosure(Rational(2), Rational(4)));
  Enclosure neg(Rational(-1, 2), Rational(-1, 4));
  CHECK(neg.reciprocal() == Enclosure(Rational(-4), Rational(-2)));
}

TEST_CASE("scaling by a negative rational flips the bracket") {
  Enclosure e(Rational(1, 4), Rational(1, 2));
  CHECK(e.scale(Rational(-2)) == Enclosure(Rational(-1), Rational(-1, 2)));
}

TEST_CASE("outward rounding widens onto the dyadic grid and keeps containment") {
  Enclosure e(Rational(1, 3), Rational(2, 3));
  Enclosure r = e.round_outward(8);
  CHECK(r.contains(e));
  CHECK((r.lo * Rational::pow2(8)).is_integer());
  CHECK((r.hi * Rational::pow2(8)).is_integer());
  CHECK(r.width() <= e.width() + Rational::pow2(-7));
}

TEST_CASE("widen pads both sides") {
  Enclosure e = Enclosure::point(Rational(1, 2)).widen(Rational(1, 8));
  CHECK(e == Enclosure(Rational(3, 8), Rational(5, 8)));
}
