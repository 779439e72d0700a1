#pragma once

#include <string>

#include "dlab/rational.hpp"

namespace dlab {

// Certified bracket [lo, hi] around a real value. All operations are outward:
// the true result of an operation on enclosed values stays enclosed.
struct Enclosure {
  Rational lo, hi;

  Enclosure() = default;
  Enclosure(Rational lo_, Rational hi_);
  static Enclosure point(const Rational& r) { return Enclosure(r, r); }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Enclosure& sub) const { return lo <= sub.lo && sub.hi <= hi; }
  bool intersects(const Enclosure& o) const { return lo <= o.hi && o.lo <= hi; }
  bool is_positive() const { return lo.is_positive(); }
  bool is_negative() const { return hi.is_negative(); }

  Enclosure operator-() const { return Enclosure(-hi, -lo); }
  friend Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo + b.lo, a.hi + b.hi);
  }
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo - b.hi, a.hi - b.lo);
  }
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);

  Enclosure scale(const Rational& c) const;      // multiply by an exact rational
  Enclosure divide_by(const Rational& c) const;  // c != 0
  // Reciprocal of an enclosure of constant sign (throws if it straddles 0).
  Enclosure reciprocal() const;
  Enclosure abs() const;
  Enclosure square() const;  // enclosure of x^2, tight at 0
  Enclosure widen(const Rational& eps) const { return Enclosure(lo - eps, hi + eps); }
  static Enclosure hull(const Enclosure& a, const Enclosure& b);

  // Round endpoints outward onto the dyadic grid 2^-prec_bits.
  Enclosure round_outward(int prec_bits) const;

  friend bool operator==(const Enclosure& a, const Enclosure& b) = default;

  std::string to_string() const;  // "[p/q, p/q]"
};

// Directed dyadic rounding of a single rational.
Rational round_down(const Rational& x, int prec_bits);
Rational round_up(const Rational& x, int prec_bits);

}  // namespace dlab
