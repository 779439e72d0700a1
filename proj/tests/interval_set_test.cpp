#include "dlab/interval_set.hpp"

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "support/test_util.hpp"

using dlab::Interval;
using dlab::IntervalSet;
using dlab::Rational;

namespace {

// Probe points that can distinguish any two of the given sets: every endpoint
// involved, midpoints between consecutive endpoints, and the ambient ends.
std::vector<Rational> probe_points(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Rational> ends{Rational(0), Rational(1)};
  for (const IntervalSet* s : {&a, &b}) {
    for (const Interval& c : s->components()) {
      ends.push_back(c.lo);
      ends.push_back(c.hi);
    }
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  std::vector<Rational> probes = ends;
  for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
    probes.push_back((ends[i] + ends[i + 1]) / Rational(2));
  }
  return probes;
}

IntervalSet random_set(dlab_test::TestRng& rng) {
  std::vector<Interval> raw;
  std::size_t n = 1 + rng.below(4);
  for (std::size_t i = 0; i < n; ++i) {
    long long den = 2 + static_cast<long long>(rng.below(30));
    long long a = static_cast<long long>(rng.below(static_cast<std::uint64_t>(den)));
    long long b = static_cast<long long>(rng.below(static_cast<std::uint64_t>(den)));
    if (a > b) std::swap(a, b);
    Rational lo(a, den), hi(b, den);
    bool lc = rng.below(2) == 0, hc = rng.below(2) == 0;
    if (lo == hi) {
      raw.push_back(Interval::point(lo));
    } else {
      raw.push_back(Interval::make(lo, hi, lc, hc));
    }
  }
  return IntervalSet(raw);
}

}  // namespace

TEST_CASE("normalization merges overlapping and touching-closed pieces") {
  IntervalSet s(std::vector<Interval>{
      Interval::open(Rational(0), Rational(1, 4)),
      Interval::closed(Rational(1, 8), Rational(1, 2)),
  });
  REQUIRE(s.size() == 1);
  CHECK(s.components()[0] == Interval::make(Rational(0), Rational(1, 2), false, true));

  // open pieces touching at a point do not merge: the point is missing
  IntervalSet t(std::vector<Interval>{
      Interval::open(Rational(0), Rational(1, 4)),
      Interval::open(Rational(1, 4), Rational(1, 2)),
  });
  CHECK(t.size() == 2);

  // one closed end glues them
  IntervalSet u(std::vector<Interval>{
      Interval::open(Rational(0), Rational(1, 4)),
      Interval::make(Rational(1, 4), Rational(1, 2), true, false),
  });
  CHECK(u.size() == 1);
}

TEST_CASE("measure ignores closure flags and sums component lengths") {
  IntervalSet s(std::vector<Interval>{
      Interval::open(Rational(0), Rational(1, 4)),
      Interval::closed(Rational(1, 2), Rational(5, 8)),
      Interval::point(Rational(7, 8)),
  });
  CHECK(s.measure() == Rational(3, 8));
  CHECK(IntervalSet().measure() == Rational(0));
}

TEST_CASE("set operations agree with pointwise membership on random pairs") {
  dlab_test::TestRng rng(0x5E75);
  for (int trial = 0; trial < 120; ++trial) {
    IntervalSet a = random_set(rng);
    IntervalSet b = random_set(rng);
    IntervalSet un = IntervalSet::unite(a, b);
    IntervalSet in = IntervalSet::intersect(a, b);
    IntervalSet di = IntervalSet::difference(a, b);
    IntervalSet ca = a.complement();
    for (const Rational& x : probe_points(a, b)) {
      bool ina = a.contains(x), inb = b.contains(x);
      CHECK(un.contains(x) == (ina || inb));
      CHECK(in.contains(x) == (ina && inb));
      CHECK(di.contains(x) == (ina && !inb));
      CHECK(ca.contains(x) == !ina);
    }
  }
}

TEST_CASE("measure is additive across disjoint pieces and inclusion-exclusion") {
  dlab_test::TestRng rng(0x5E76);
  for (int trial = 0; trial < 60; ++trial) {
    IntervalSet a = random_set(rng);
    IntervalSet b = random_set(rng);
    Rational lhs = IntervalSet::unite(a, b).measure() + IntervalSet::intersect(a, b).measure();
    CHECK(lhs == a.measure() + b.measure());
    CHECK(a.measure() + a.complement().measure() == Rational(1));
  }
}

TEST_CASE("double complement is the identity on normalized sets") {
  dlab_test::TestRng rng(0x5E77);
  for (int trial = 0; trial < 40; ++trial) {
    IntervalSet a = random_set(rng);
    CHECK(a.complement().complement() == a);
  }
}
