#include "dlab/enclosure_math.hpp"

#include "dlab/quadratic.hpp"
#include "doctest.h"
#include "support/test_util.hpp"

using dlab::Enclosure;
using dlab::QuadraticIrrational;
using dlab::Rational;
using dlab_test::pi_oracle;
using dlab_test::sqrt_oracle;

TEST_CASE("pi enclosure agrees with an independent arctan formula") {
  Enclosure pi_ref = pi_oracle();  // internally pinned to a 20-digit literal
  for (int prec : {16, 48, 96, 160}) {
    Enclosure pi = dlab::pi_enclosure(prec);
    CHECK(pi.width() <= Rational::pow2(-prec));
    CHECK(pi.intersects(pi_ref));
    // the reference bracket is ~2^-196 wide, far tighter than any precision
    // requested here, so it must nest inside the library enclosure
    CHECK(pi.contains(pi_ref));
  }
}

TEST_CASE("square roots bracket correctly and match bisection") {
  dlab_test::TestRng rng(0x50B1);
  for (int trial = 0; trial < 40; ++trial) {
    long long num = rng.below(400);
    long long den = 1 + static_cast<long long>(rng.below(40));
    Rational x(num, den);
    Enclosure r = dlab::sqrt_enclosure(x, 50);
    CHECK(r.width() <= Rational::pow2(-50));
    CHECK(!r.lo.is_negative());
    CHECK(r.lo * r.lo <= x);
    CHECK(x <= r.hi * r.hi);
    CHECK(r.intersects(sqrt_oracle(x, 60)));
  }
  CHECK(dlab::sqrt_enclosure(Rational(0), 50).contains(Rational(0)));
  CHECK(dlab::sqrt_enclosure(Rational(1), 50).contains(Rational(1)));
  CHECK(dlab::sqrt_enclosure(Rational(1, 4), 50).contains(Rational(1, 2)));
  CHECK(dlab::sqrt2_enclosure(60).intersects(sqrt_oracle(Rational(2), 70)));
}

TEST_CASE("sine and cosine hit exact special angles") {
  const int prec = 60;
  CHECK(dlab::sin2pi(Rational(0), prec).contains(Rational(0)));
  CHECK(dlab::sin2pi(Rational(1, 4), prec).contains(Rational(1)));
  CHECK(dlab::sin2pi(Rational(1, 2), prec).contains(Rational(0)));
  CHECK(dlab::sin2pi(Rational(3, 4), prec).contains(Rational(-1)));
  CHECK(dlab::cos2pi(Rational(0), prec).contains(Rational(1)));
  CHECK(dlab::cos2pi(Rational(1, 4), prec).contains(Rational(0)));
  CHECK(dlab::cos2pi(Rational(1, 2), prec).contains(Rational(-1)));
  // sin(pi/6) = 1/2 and cos(pi/3) = 1/2 exactly
  CHECK(dlab::sin2pi(Rational(1, 12), prec).contains(Rational(1, 2)));
  CHECK(dlab::cos2pi(Rational(1, 6), prec).contains(Rational(1, 2)));
  // sin(pi/4) = cos(pi/4) = sqrt(2)/2
  Enclosure half_root = sqrt_oracle(Rational(1, 2), 70);
  CHECK(dlab::sin2pi(Rational(1, 8), prec).intersects(half_root));
  CHECK(dlab::cos2pi(Rational(1, 8), prec).intersects(half_root));
}

TEST_CASE("trig identities hold as enclosure overlaps at random angles") {
  dlab_test::TestRng rng(0x50B2);
  const int prec = 56;
  for (int trial = 0; trial < 30; ++trial) {
    long long num = static_cast<long long>(rng.below(700)) - 350;
    long long den = 1 + static_cast<long long>(rng.below(97));
    Rational r(num, den);
    Enclosure s = dlab::sin2pi(r, prec);
    Enclosure c = dlab::cos2pi(r, prec);
    CHECK(s.width() <= Rational::pow2(-prec));
    CHECK(c.width() <= Rational::pow2(-prec));
    // Pythagorean identity
    CHECK((s.square() + c.square()).contains(Rational(1)));
    // periodicity is exact: the reduction happens before any series
    CHECK(dlab::sin2pi(r + Rational(3), prec) == s);
    CHECK(dlab::cos2pi(r - Rational(5), prec) == c);
    // oddness/evenness: both sides bracket the same real number
    CHECK(dlab::sin2pi(-r, prec).intersects(-s));
    CHECK(dlab::cos2pi(-r, prec).intersects(c));
    // double angle: sin(2x) = 2 sin x cos x
    CHECK(dlab::sin2pi(r * Rational(2), prec).intersects((s * c).scale(Rational(2))));
  }
}

TEST_CASE("quadratic irrational brackets straddle their value") {
  QuadraticIrrational x(Rational(1, 3), Rational(1, 5));  // 1/3 + sqrt(2)/5
  Enclosure bx = dlab::bracket(x, 60);
  CHECK(bx.width() <= Rational::pow2(-60));
  Enclosure ref = sqrt_oracle(Rational(2), 70).scale(Rational(1, 5)) +
                  Enclosure::point(Rational(1, 3));
  CHECK(bx.intersects(ref));
  // sign test matches the bracket
  CHECK(x.compare(bx.lo) > 0);
  CHECK(x.compare(bx.hi) < 0);
}
