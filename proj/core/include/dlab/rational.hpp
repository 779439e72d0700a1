#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace dlab {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Zero is canonically 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den);
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  // Accepts "p/q" or a bare integer "p"; throws std::invalid_argument otherwise.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_positive() const { return num_ > 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }
  bool is_integer() const { return den_ == 1; }

  Rational abs() const;
  Rational reciprocal() const;  // throws std::domain_error on zero

  BigInt floor() const;
  BigInt ceil() const;

  // 2^k for any integer k (negative k gives 1/2^|k|).
  static Rational pow2(long k);

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // Canonical "p/q" form, e.g. "-3/4", "0/1", "7/1".
  std::string to_fraction_string() const;

  // Round-to-nearest decimal rendering with the given number of significant
  // digits (half away from zero); trailing zeros trimmed. Approximate only:
  // certificate logic never consumes this.
  std::string to_decimal_string(int significant_digits = 12) const;

  double approx_double() const;

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

// floor(a/b) for b > 0, exact for negative a as well.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

}  // namespace dlab
