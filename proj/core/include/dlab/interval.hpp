#pragma once

#include <optional>
#include <string>

#include "dlab/rational.hpp"

namespace dlab {

class QuadraticIrrational;

// Subinterval of the ambient [0,1] with endpoint-closure flags.
// Invariants: 0 <= lo <= hi <= 1; if lo == hi both endpoints are closed
// (a degenerate point); anything else is rejected at construction.
struct Interval {
  Rational lo, hi;
  bool lo_closed = true, hi_closed = true;

  static Interval make(Rational lo, Rational hi, bool lo_closed, bool hi_closed);
  static Interval closed(Rational lo, Rational hi) { return make(std::move(lo), std::move(hi), true, true); }
  static Interval open(Rational lo, Rational hi) { return make(std::move(lo), std::move(hi), false, false); }
  static Interval point(Rational x) { return make(x, x, true, true); }

  // As make(), but an empty point set yields nullopt instead of throwing.
  // Used by set algebra, which routinely produces empty candidates.
  static std::optional<Interval> try_make(Rational lo, Rational hi, bool lo_closed, bool hi_closed);

  Rational length() const { return hi - lo; }
  bool is_degenerate() const { return lo == hi; }

  bool contains(const Rational& x) const;
  bool contains(const QuadraticIrrational& x) const;
  // True when every point of `other` belongs to this interval (flag-exact).
  bool contains_interval(const Interval& other) const;
  // True when every point of the open interval (a, b) belongs to this interval.
  bool contains_open(const Rational& a, const Rational& b) const;

  static std::optional<Interval> intersect(const Interval& a, const Interval& b);

  friend bool operator==(const Interval& a, const Interval& b) = default;

  // e.g. "[0/1, 1/8)"
  std::string to_string() const;
};

}  // namespace dlab
