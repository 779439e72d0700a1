#include "dlab/interval.hpp"

#include <stdexcept>

#include "dlab/quadratic.hpp"
#include "doctest.h"

using dlab::Interval;
using dlab::QuadraticIrrational;
using dlab::Rational;

TEST_CASE("construction enforces the ambient interval and flag rules") {
  CHECK_NOTHROW(Interval::closed(Rational(0), Rational(1)));
  CHECK_NOTHROW(Interval::point(Rational(1, 2)));
  CHECK_THROWS_AS(Interval::closed(Rational(1, 2), Rational(1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(Interval::closed(Rational(-1, 2), Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(Interval::closed(Rational(1, 2), Rational(3, 2)), std::invalid_argument);
  // a degenerate open interval is the empty set, which is not an Interval
  CHECK_THROWS_AS(Interval::open(Rational(1, 2), Rational(1, 2)), std::invalid_argument);
  CHECK(Interval::try_make(Rational(1, 2), Rational(1, 2), false, true) == std::nullopt);
  CHECK(Interval::try_make(Rational(0), Rational(1), false, false).has_value());
}

TEST_CASE("containment respects closure flags") {
  Interval open = Interval::open(Rational(1, 4), Rational(3, 4));
  Interval closed = Interval::closed(Rational(1, 4), Rational(3, 4));
  CHECK(!open.contains(Rational(1, 4)));
  CHECK(!open.contains(Rational(3, 4)));
  CHECK(open.contains(Rational(1, 2)));
  CHECK(closed.contains(Rational(1, 4)));
  CHECK(closed.contains(Rational(3, 4)));
  CHECK(!closed.contains(Rational(7, 8)));
}

TEST_CASE("containment of quadratic irrationals is exact") {
  // sqrt(2)/2 = 0.7071...
  QuadraticIrrational root_half(Rational(0), Rational(1, 2));
  CHECK(Interval::open(Rational(7, 10), Rational(8, 10)).contains(root_half));
  CHECK(!Interval::open(Rational(0), Rational(7, 10)).contains(root_half));
  CHECK(!Interval::closed(Rational(71, 100), Rational(1)).contains(root_half));
  CHECK(Interval::closed(Rational(70, 99), Rational(5, 7)).contains(root_half));
}

TEST_CASE("interval containment is flag-exact") {
  Interval host = Interval::make(Rational(0), Rational(1, 2), true, false);
  CHECK(host.contains_interval(Interval::closed(Rational(0), Rational(1, 4))));
  CHECK(host.contains_interval(Interval::open(Rational(0), Rational(1, 2))));
  CHECK(!host.contains_interval(Interval::closed(Rational(0), Rational(1, 2))));
  CHECK(host.contains_open(Rational(0), Rational(1, 2)));
  CHECK(!host.contains_open(Rational(0), Rational(3, 4)));
}

TEST_CASE("intersection matches pointwise membership on a probe grid") {
  Interval a = Interval::make(Rational(0), Rational(1, 2), true, false);
  Interval b = Interval::make(Rational(1, 4), Rational(3, 4), false, true);
  auto meet = Interval::intersect(a, b);
  REQUIRE(meet.has_value());
  CHECK(*meet == Interval::open(Rational(1, 4), Rational(1, 2)));

  // disjoint pieces meet in nothing, touching-open pieces too
  CHECK(Interval::intersect(Interval::open(Rational(0), Rational(1, 4)),
                            Interval::open(Rational(1, 4), Rational(1, 2))) == std::nullopt);
  // touching with one closed end meets in the shared point
  auto pt = Interval::intersect(Interval::closed(Rational(0), Rational(1, 4)),
                                Interval::closed(Rational(1, 4), Rational(1, 2)));
  REQUIRE(pt.has_value());
  CHECK(*pt == Interval::point(Rational(1, 4)));
}

TEST_CASE("length and degeneracy") {
  CHECK(Interval::open(Rational(1, 8), Rational(5, 8)).length() == Rational(1, 2));
  CHECK(Interval::point(Rational(1, 3)).length() == Rational(0));
  CHECK(Interval::point(Rational(1, 3)).is_degenerate());
}

TEST_CASE("rendering shows flags") {
  CHECK(Interval::make(Rational(0), Rational(1, 8), true, false).to_string() == "[0/1, 1/8)");
  CHECK(Interval::open(Rational(1, 4), Rational(1, 2)).to_string() == "(1/4, 1/2)");
}
