#include "dlab/witnesses.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace dlab {

namespace {

// Smallest integer admissible as a lower bound: > lo when excluded, >= lo
// otherwise.
BigInt first_integer_from(const Rational& lo, bool lo_excluded) {
  if (lo.is_integer()) return lo.num() + (lo_excluded ? 1 : 0);
  return lo.ceil();
}

}  // namespace

Rational simplest_rational_in(const Interval& J) {
  if (J.is_degenerate()) {
    if (J.lo_closed && J.hi_closed) return J.lo;
    throw std::domain_error("simplest_rational_in: degenerate interval with excluded endpoint");
  }

  // Continued-fraction descent: strip integer parts, invert, repeat until an
  // integer is admissible; the accumulated coefficients reconstruct the
  // minimal-denominator element. Ties (denominator 1) only occur for [0,1],
  // where the smallest admissible integer wins.
  Rational lo = J.lo, hi = J.hi;
  bool lo_x = !J.lo_closed, hi_x = !J.hi_closed;
  bool hi_unbounded = false;
  std::vector<BigInt> coeffs;

  while (true) {
    BigInt n0 = first_integer_from(lo, lo_x);
    Rational n0r(n0);
    bool admissible = hi_unbounded || n0r < hi || (n0r == hi && !hi_x);
    if (admissible) {
      Rational acc(n0);
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = Rational(*it) + acc.reciprocal();
      return acc;
    }
    BigInt m = lo.floor();
    Rational mr(m);
    coeffs.push_back(m);
    // x = m + 1/y maps J onto a reversed interval for y.
    Rational new_lo = (hi - mr).reciprocal();
    bool new_lo_x = hi_x;
    if (lo > mr) {
      Rational new_hi = (lo - mr).reciprocal();
      bool new_hi_x = lo_x;
      lo = new_lo;
      lo_x = new_lo_x;
      hi = new_hi;
      hi_x = new_hi_x;
      hi_unbounded = false;
    } else {
      lo = new_lo;
      lo_x = new_lo_x;
      hi_unbounded = true;
    }
  }
}

QuadraticIrrational irrational_in(const Interval& J) {
  if (J.is_degenerate())
    throw std::domain_error("irrational_in: degenerate interval holds no irrational");
  Rational mid = (J.lo + J.hi) / Rational(2);
  Rational q = (J.hi - J.lo) / Rational(4);
  QuadraticIrrational w(mid, q);
  // Strict interiority is guaranteed by sqrt2 < 2; verify anyway.
  if (!(w.compare(J.lo) > 0 && w.compare(J.hi) < 0))
    throw std::logic_error("irrational_in: witness failed exact interiority check");
  return w;
}

}  // namespace dlab
