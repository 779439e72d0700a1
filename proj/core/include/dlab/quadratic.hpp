#pragma once

#include <string>

#include "dlab/rational.hpp"

namespace dlab {

// Exact representation of p + q*sqrt(2) with rational p, q and q != 0.
// Always irrational, so comparison against any rational has a strict sign,
// decided exactly by squaring.
class QuadraticIrrational {
 public:
  QuadraticIrrational(Rational p, Rational q);

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }

  // Sign of (p + q*sqrt(2)) - r; never zero.
  int compare(const Rational& r) const;
  bool operator<(const Rational& r) const { return compare(r) < 0; }
  bool operator>(const Rational& r) const { return compare(r) > 0; }

  // e.g. "1/2 + 1/4*sqrt2", "1/2 - 1/4*sqrt2"
  std::string to_string() const;

  friend bool operator==(const QuadraticIrrational& a, const QuadraticIrrational& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  Rational p_, q_;
};

}  // namespace dlab
