#include "dlab/piecewise.hpp"

#include <stdexcept>
#include <variant>
#include <vector>

#include "dlab/enclosure_math.hpp"
#include "dlab/quadratic.hpp"
#include "doctest.h"
#include "support/test_util.hpp"

using dlab::Enclosure;
using dlab::Interval;
using dlab::IntervalSet;
using dlab::KurtzTail;
using dlab::PiecewiseFn;
using dlab::PointValue;
using dlab::QuadraticIrrational;
using dlab::Rational;
using dlab::StepFunction;
using dlab::StepPiece;

TEST_CASE("canonical form identifies equal step functions") {
  // same function presented as split pieces vs a single run
  StepFunction split({{Interval{Rational(0), Rational(1, 4), true, true}, Rational(1)},
                      {Interval{Rational(1, 4), Rational(1, 2), false, true}, Rational(1)}},
                     {});
  StepFunction merged = StepFunction::indicator(
      IntervalSet::of(Interval::closed(Rational(0), Rational(1, 2))));
  CHECK(split == merged);

  // a zero-valued piece vanishes from the canonical form
  StepFunction with_zero({{Interval::closed(Rational(0), Rational(1, 2)), Rational(1)},
                          {Interval{Rational(1, 2), Rational(1), false, true}, Rational(0)}},
                         {});
  CHECK(with_zero == merged);

  // a degenerate piece becomes an exception; a redundant exception vanishes
  StepFunction point_piece({{Interval::point(Rational(3, 4)), Rational(5)}}, {});
  StepFunction as_exception({}, {{Rational(3, 4), Rational(5)}});
  CHECK(point_piece == as_exception);
  CHECK(point_piece.pieces().empty());
  CHECK(point_piece.exceptions().size() == 1);

  StepFunction redundant({{Interval::closed(Rational(0), Rational(1)), Rational(2)}},
                         {{Rational(1, 2), Rational(2)}});
  CHECK(redundant == StepFunction::constant(Rational(2)));
  CHECK(redundant.exceptions().empty());
}

TEST_CASE("evaluation respects closure flags and exceptions") {
  StepFunction f({{Interval{Rational(0), Rational(1, 2), true, false}, Rational(3)},
                  {Interval{Rational(1, 2), Rational(1), true, true}, Rational(-2)}},
                 {{Rational(1, 4), Rational(7)}});
  CHECK(f.eval(Rational(0)) == Rational(3));
  CHECK(f.eval(Rational(1, 3)) == Rational(3));
  CHECK(f.eval(Rational(1, 2)) == Rational(-2));
  CHECK(f.eval(Rational(1)) == Rational(-2));
  CHECK(f.eval(Rational(1, 4)) == Rational(7));  // exception wins over the piece

  // irrational points never hit an exception
  QuadraticIrrational x(Rational(0), Rational(1, 4));  // sqrt(2)/4 ~ 0.354
  CHECK(f.eval(x) == Rational(3));
  QuadraticIrrational y(Rational(0), Rational(1, 2));  // sqrt(2)/2 ~ 0.707
  CHECK(f.eval(y) == Rational(-2));
}

TEST_CASE("seminorm integrates absolute value and ignores null sets") {
  StepFunction f({{Interval::closed(Rational(0), Rational(1, 4)), Rational(2)},
                  {Interval{Rational(1, 2), Rational(1), false, true}, Rational(-3)}},
                 {{Rational(3, 8), Rational(1000)}});
  // 2*(1/4) + 3*(1/2) = 2
  CHECK(f.seminorm_l1() == Rational(2));
  CHECK(StepFunction().seminorm_l1() == Rational(0));
  CHECK(StepFunction::constant(Rational(-5, 7)).seminorm_l1() == Rational(5, 7));
}

TEST_CASE("linear combinations evaluate pointwise") {
  dlab_test::TestRng rng(0x91EC);
  StepFunction f({{Interval{Rational(0), Rational(2, 3), true, false}, Rational(1, 2)}},
                 {{Rational(1, 5), Rational(4)}});
  StepFunction g({{Interval{Rational(1, 3), Rational(1), true, true}, Rational(-1, 4)}},
                 {{Rational(1, 5), Rational(-1)}});
  Rational a(3, 2), b(-2);
  StepFunction h = StepFunction::linear_combine(a, f, b, g);
  for (int trial = 0; trial < 60; ++trial) {
    long long den = 1 + static_cast<long long>(rng.below(60));
    long long num = static_cast<long long>(rng.below(den + 1));
    Rational x(num, den);
    CHECK(h.eval(x) == a * f.eval(x) + b * g.eval(x));
  }
  for (Rational x : {Rational(0), Rational(1, 5), Rational(1, 3), Rational(2, 3), Rational(1)}) {
    CHECK(h.eval(x) == a * f.eval(x) + b * g.eval(x));
  }
}

TEST_CASE("breakpoints cover endpoints and exceptional points") {
  StepFunction f({{Interval{Rational(1, 4), Rational(1, 2), false, true}, Rational(2)}},
                 {{Rational(7, 8), Rational(1)}});
  std::vector<Rational> bp = f.breakpoints();
  REQUIRE(bp.size() == 5);
  CHECK(bp[0] == Rational(0));
  CHECK(bp[1] == Rational(1, 4));
  CHECK(bp[2] == Rational(1, 2));
  CHECK(bp[3] == Rational(7, 8));
  CHECK(bp[4] == Rational(1));
}

TEST_CASE("tail function evaluates exactly below the cut and tightly above") {
  PiecewiseFn f4 = KurtzTail{4};
  // at and below the cut the value is exactly zero
  CHECK(std::get<Rational>(eval(f4, Rational(1, 4))) == Rational(0));
  CHECK(std::get<Rational>(eval(f4, Rational(0))) == Rational(0));
  // above the cut: f(9/16) = (9/16)^(-1/2) = 4/3
  Enclosure v = std::get<Enclosure>(eval(f4, Rational(9, 16)));
  CHECK(v.contains(Rational(4, 3)));
  CHECK(v.width() <= Rational::pow2(-50));
  // self-check on a non-square point: f(x)^2 * x == 1
  Enclosure w = std::get<Enclosure>(eval(f4, Rational(1, 3)));
  CHECK(w.square().scale(Rational(1, 3)).contains(Rational(1)));

  // irrational evaluation: below cut exact zero, above cut bracket of x^(-1/2)
  QuadraticIrrational low(Rational(0), Rational(1, 8));   // sqrt(2)/8 ~ 0.177 < 1/4
  QuadraticIrrational high(Rational(0), Rational(1, 2));  // sqrt(2)/2 ~ 0.707
  CHECK(std::get<Rational>(eval(f4, low)) == Rational(0));
  Enclosure u = std::get<Enclosure>(eval(f4, high));
  // (sqrt(2)/2)^(-1/2) = 2^(1/4): verify u^4 straddles 2
  CHECK(u.square().square().contains(Rational(2)));
}

TEST_CASE("tail seminorm matches the closed-form antiderivative") {
  // integral of x^(-1/2) from 1/j to 1 is 2*(1 - j^(-1/2))
  CHECK(std::get<Enclosure>(seminorm_l1(PiecewiseFn{KurtzTail{1}})).contains(Rational(0)));
  Enclosure s4 = std::get<Enclosure>(seminorm_l1(PiecewiseFn{KurtzTail{4}}));
  CHECK(s4.contains(Rational(1)));
  CHECK(s4.width() <= Rational::pow2(-60));
  Enclosure s9 = std::get<Enclosure>(seminorm_l1(PiecewiseFn{KurtzTail{9}}));
  CHECK(s9.contains(Rational(4, 3)));
  Enclosure s100 = std::get<Enclosure>(seminorm_l1(PiecewiseFn{KurtzTail{100}}));
  CHECK(s100.contains(Rational(9, 5)));  // 2*(1 - 1/10)

  // step seminorm flows through the variant interface unchanged
  PiecewiseFn step = StepFunction::constant(Rational(1, 3));
  CHECK(std::get<Rational>(seminorm_l1(step)) == Rational(1, 3));
}

TEST_CASE("almost-everywhere equality quotients out null sets") {
  StepFunction open_half = StepFunction::indicator(
      IntervalSet::of(Interval::open(Rational(0), Rational(1, 2))));
  StepFunction closed_half = StepFunction::indicator(
      IntervalSet::of(Interval::closed(Rational(0), Rational(1, 2))));
  StepFunction with_spikes({{Interval::open(Rational(0), Rational(1, 2)), Rational(1)}},
                           {{Rational(1, 7), Rational(99)}, {Rational(1), Rational(-3)}});
  CHECK(ae_equal(PiecewiseFn{open_half}, PiecewiseFn{closed_half}));
  CHECK(ae_equal(PiecewiseFn{open_half}, PiecewiseFn{with_spikes}));
  CHECK(open_half != closed_half);  // structural inequality survives
  CHECK_FALSE(ae_equal(PiecewiseFn{open_half}, PiecewiseFn{StepFunction::constant(Rational(1))}));

  CHECK(ae_equal(PiecewiseFn{KurtzTail{3}}, PiecewiseFn{KurtzTail{3}}));
  CHECK_FALSE(ae_equal(PiecewiseFn{KurtzTail{3}}, PiecewiseFn{KurtzTail{4}}));
  CHECK_FALSE(ae_equal(PiecewiseFn{KurtzTail{1}}, PiecewiseFn{StepFunction()}));

  dlab::AeClass a{PiecewiseFn{open_half}};
  dlab::AeClass b{PiecewiseFn{closed_half}};
  CHECK(a == b);
}

TEST_CASE("combining tail functions is rejected") {
  PiecewiseFn f = StepFunction::constant(Rational(1));
  PiecewiseFn g = KurtzTail{2};
  CHECK_THROWS_AS(linear_combine(Rational(1), f, Rational(1), g), std::invalid_argument);
  CHECK_THROWS_AS(linear_combine(Rational(1), g, Rational(1), g), std::invalid_argument);
  PiecewiseFn combined = linear_combine(Rational(2), f, Rational(3), f);
  CHECK(std::get<StepFunction>(combined) == StepFunction::constant(Rational(5)));
}
