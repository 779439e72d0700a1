#include "dlab/enclosure.hpp"

#include <stdexcept>
#include <utility>

namespace dlab {

Enclosure::Enclosure(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo > hi) throw std::invalid_argument("Enclosure: lo > hi");
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return Enclosure(min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4)));
}

Enclosure Enclosure::scale(const Rational& c) const {
  if (c.is_negative()) return Enclosure(hi * c, lo * c);
  return Enclosure(lo * c, hi * c);
}

Enclosure Enclosure::divide_by(const Rational& c) const {
  if (c.is_zero()) throw std::domain_error("Enclosure: division by zero");
  return scale(c.reciprocal());
}

Enclosure Enclosure::reciprocal() const {
  if (!is_positive() && !is_negative())
    throw std::domain_error("Enclosure: reciprocal of an enclosure containing 0");
  return Enclosure(hi.reciprocal(), lo.reciprocal());
}

Enclosure Enclosure::abs() const {
  if (!lo.is_negative()) return *this;
  if (!hi.is_positive()) return Enclosure(-hi, -lo);
  return Enclosure(Rational(0), max(-lo, hi));
}

Enclosure Enclosure::square() const {
  Enclosure a = abs();
  return Enclosure(a.lo * a.lo, a.hi * a.hi);
}

Enclosure Enclosure::hull(const Enclosure& a, const Enclosure& b) {
  return Enclosure(min(a.lo, b.lo), max(a.hi, b.hi));
}

Rational round_down(const Rational& x, int prec_bits) {
  BigInt scaled = floor_div(x.num() << prec_bits, x.den());
  return Rational(std::move(scaled), BigInt(1) << prec_bits);
}

Rational round_up(const Rational& x, int prec_bits) {
  BigInt scaled = ceil_div(x.num() << prec_bits, x.den());
  return Rational(std::move(scaled), BigInt(1) << prec_bits);
}

Enclosure Enclosure::round_outward(int prec_bits) const {
  return Enclosure(round_down(lo, prec_bits), round_up(hi, prec_bits));
}

std::string Enclosure::to_string() const {
  return "[" + lo.to_fraction_string() + ", " + hi.to_fraction_string() + "]";
}

}  // namespace dlab
