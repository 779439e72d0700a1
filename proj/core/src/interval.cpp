#include "dlab/interval.hpp"

#include <stdexcept>
#include <utility>

#include "dlab/quadratic.hpp"

namespace dlab {

Interval Interval::make(Rational lo, Rational hi, bool lo_closed, bool hi_closed) {
  auto iv = try_make(std::move(lo), std::move(hi), lo_closed, hi_closed);
  if (!iv) throw std::invalid_argument("Interval: empty or inverted endpoints");
  return *iv;
}

std::optional<Interval> Interval::try_make(Rational lo, Rational hi, bool lo_closed,
                                           bool hi_closed) {
  if (lo.is_negative() || hi > Rational(1))
    throw std::invalid_argument("Interval: endpoints outside ambient [0,1]");
  if (lo > hi) return std::nullopt;
  if (lo == hi && !(lo_closed && hi_closed)) return std::nullopt;
  Interval iv;
  iv.lo = std::move(lo);
  iv.hi = std::move(hi);
  iv.lo_closed = lo_closed;
  iv.hi_closed = hi_closed;
  return iv;
}

bool Interval::contains(const Rational& x) const {
  if (x < lo || x > hi) return false;
  if (x == lo && !lo_closed) return false;
  if (x == hi && !hi_closed) return false;
  return true;
}

bool Interval::contains(const QuadraticIrrational& x) const {
  // An irrational never coincides with a rational endpoint, so flags are moot.
  return x.compare(lo) > 0 && x.compare(hi) < 0;
}

bool Interval::contains_interval(const Interval& other) const {
  bool lo_ok = lo < other.lo || (lo == other.lo && (lo_closed || !other.lo_closed));
  bool hi_ok = other.hi < hi || (other.hi == hi && (hi_closed || !other.hi_closed));
  return lo_ok && hi_ok;
}

bool Interval::contains_open(const Rational& a, const Rational& b) const {
  return lo <= a && b <= hi;
}

std::optional<Interval> Interval::intersect(const Interval& a, const Interval& b) {
  Rational lo;
  bool lc;
  if (a.lo > b.lo) {
    lo = a.lo;
    lc = a.lo_closed;
  } else if (b.lo > a.lo) {
    lo = b.lo;
    lc = b.lo_closed;
  } else {
    lo = a.lo;
    lc = a.lo_closed && b.lo_closed;
  }
  Rational hi;
  bool hc;
  if (a.hi < b.hi) {
    hi = a.hi;
    hc = a.hi_closed;
  } else if (b.hi < a.hi) {
    hi = b.hi;
    hc = b.hi_closed;
  } else {
    hi = a.hi;
    hc = a.hi_closed && b.hi_closed;
  }
  return try_make(std::move(lo), std::move(hi), lc, hc);
}

std::string Interval::to_string() const {
  std::string s = lo_closed ? "[" : "(";
  s += lo.to_fraction_string();
  s += ", ";
  s += hi.to_fraction_string();
  s += hi_closed ? "]" : ")";
  return s;
}

}  // namespace dlab
