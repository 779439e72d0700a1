#include "dlab/quadratic.hpp"

#include <stdexcept>
#include <utility>

namespace dlab {

QuadraticIrrational::QuadraticIrrational(Rational p, Rational q)
    : p_(std::move(p)), q_(std::move(q)) {
  if (q_.is_zero()) throw std::invalid_argument("QuadraticIrrational: q must be nonzero");
}

int QuadraticIrrational::compare(const Rational& r) const {
  //   sign(d + q*sqrt2) with d = p - r.
  Rational d = p_ - r;
  if (q_.is_positive()) {
    if (!d.is_negative()) return 1;
    // d < 0: q*sqrt2 vs -d, both positive; compare squares.
    Rational lhs = Rational(2) * q_ * q_;
    Rational rhs = d * d;
    // Equality is impossible: it would make sqrt2 rational.
    return lhs > rhs ? 1 : -1;
  }
  if (d.is_negative() || d.is_zero()) return -1;
  Rational lhs = Rational(2) * q_ * q_;
  Rational rhs = d * d;
  return lhs < rhs ? 1 : -1;
}

std::string QuadraticIrrational::to_string() const {
  std::string s = p_.to_fraction_string();
  if (q_.is_negative()) {
    s += " - " + (-q_).to_fraction_string() + "*sqrt2";
  } else {
    s += " + " + q_.to_fraction_string() + "*sqrt2";
  }
  return s;
}

}  // namespace dlab
