#include "dlab/rational.hpp"

#include <stdexcept>
#include <utility>

namespace dlab {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  size_t b = 0, e = text.size();
  while (b < e && (text[b] == ' ' || text[b] == '\t')) ++b;
  while (e > b && (text[e - 1] == ' ' || text[e - 1] == '\t')) --e;
  text = text.substr(b, e - b);
  if (text.empty()) throw std::invalid_argument("Rational::parse: empty input");

  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };

  size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) throw std::invalid_argument("Rational::parse: not an integer or p/q");
    return Rational(BigInt(std::string(text)));
  }
  std::string_view p = text.substr(0, slash);
  std::string_view q = text.substr(slash + 1);
  if (!is_int(p) || !is_int(q)) throw std::invalid_argument("Rational::parse: not p/q");
  return Rational(BigInt(std::string(p)), BigInt(std::string(q)));
}

Rational Rational::abs() const {
  Rational r = *this;
  if (r.num_ < 0) r.num_ = -r.num_;
  return r;
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw std::domain_error("Rational: reciprocal of zero");
  Rational r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_ < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

BigInt Rational::floor() const { return floor_div(num_, den_); }
BigInt Rational::ceil() const { return ceil_div(num_, den_); }

Rational Rational::pow2(long k) {
  Rational r;
  if (k >= 0) {
    r.num_ = BigInt(1) << k;
    r.den_ = 1;
  } else {
    r.num_ = 1;
    r.den_ = BigInt(1) << (-k);
  }
  return r;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_fraction_string() const {
  return num_.str() + "/" + den_.str();
}

std::string Rational::to_decimal_string(int significant_digits) const {
  if (significant_digits < 1) throw std::invalid_argument("to_decimal_string: digits < 1");
  if (num_ == 0) return "0";
  const int sig = significant_digits;
  BigInt a = num_ < 0 ? BigInt(-num_) : num_;
  const BigInt& b = den_;

  // Decimal exponent e10 = floor(log10(a/b)).
  long e10;
  BigInt ip = a / b;
  if (ip > 0) {
    e10 = static_cast<long>(ip.str().size()) - 1;
  } else {
    BigInt acc = a * 10;
    long m = 1;
    while (acc < b) {
      acc *= 10;
      ++m;
    }
    e10 = -m;
  }

  // D = round(a/b * 10^(sig-1-e10)), half away from zero.
  long t = sig - 1 - e10;
  BigInt n = a, d = b;
  if (t >= 0)
    n *= mp::pow(BigInt(10), static_cast<unsigned>(t));
  else
    d *= mp::pow(BigInt(10), static_cast<unsigned>(-t));
  BigInt D = (2 * n + d) / (2 * d);
  BigInt limit = mp::pow(BigInt(10), static_cast<unsigned>(sig));
  if (D == limit) {  // rounding carried into an extra digit
    D /= 10;
    ++e10;
  }

  std::string digits = D.str();
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

  std::string out = num_ < 0 ? "-" : "";
  if (e10 >= -7 && e10 <= 14) {
    if (e10 >= 0) {
      if (static_cast<long>(digits.size()) <= e10) {
        out += digits;
        out.append(static_cast<size_t>(e10 + 1 - static_cast<long>(digits.size())), '0');
      } else {
        out += digits.substr(0, static_cast<size_t>(e10 + 1));
        if (digits.size() > static_cast<size_t>(e10 + 1)) {
          out += ".";
          out += digits.substr(static_cast<size_t>(e10 + 1));
        }
      }
    } else {
      out += "0.";
      out.append(static_cast<size_t>(-e10 - 1), '0');
      out += digits;
    }
  } else {
    out += digits.substr(0, 1);
    if (digits.size() > 1) {
      out += ".";
      out += digits.substr(1);
    }
    out += "e";
    out += std::to_string(e10);
  }
  return out;
}

double Rational::approx_double() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

}  // namespace dlab
