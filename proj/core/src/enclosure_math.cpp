#include "dlab/enclosure_math.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace dlab {

namespace mp = boost::multiprecision;

namespace {

// Alternating-series bracket of arctan(1/x) for integer x >= 2: terms
// decrease strictly, so the truncation error is below the first omitted term.
Enclosure atan_inv_bracket(long x, int prec_bits) {
  const Rational inv(1, x);
  const Rational inv2 = inv * inv;
  Rational term = inv;  // 1/((2k+1) x^(2k+1)) at k = 0 times (2k+1): built below
  Rational power = inv;
  Rational sum;
  const Rational cutoff = Rational::pow2(-(prec_bits + 8));
  long k = 0;
  while (true) {
    Rational t = power / Rational(2 * k + 1);
    if (t <= cutoff) {
      return Enclosure(sum - t, sum + t);
    }
    if (k % 2 == 0)
      sum += t;
    else
      sum -= t;
    power *= inv2;
    ++k;
  }
}

Enclosure pi_uncached(int prec_bits) {
  // Machin: pi = 16*arctan(1/5) - 4*arctan(1/239).
  Enclosure a5 = atan_inv_bracket(5, prec_bits + 6);
  Enclosure a239 = atan_inv_bracket(239, prec_bits + 6);
  Enclosure pi = a5.scale(Rational(16)) - a239.scale(Rational(4));
  return pi.round_outward(prec_bits + 2);
}

}  // namespace

Enclosure pi_enclosure(int prec_bits) {
  static std::mutex mu;
  static std::map<int, Enclosure> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(prec_bits);
  if (it != cache.end()) return it->second;
  Enclosure e = pi_uncached(prec_bits);
  cache.emplace(prec_bits, e);
  return e;
}

Enclosure sqrt_enclosure(const Rational& x, int prec_bits) {
  if (x.is_negative()) throw std::domain_error("sqrt_enclosure: negative input");
  if (x.is_zero()) return Enclosure::point(Rational(0));
  // sqrt(n/d) = sqrt(n*d)/d; scale by 4^m so the integer-sqrt bracket
  // width 1/(d*2^m) is below 2^-(prec+2).
  const BigInt& n = x.num();
  const BigInt& d = x.den();
  long dbits = static_cast<long>(mp::msb(d));
  long m = prec_bits + 2 - dbits;
  if (m < 0) m = 0;
  BigInt scaled = n * d;
  scaled <<= static_cast<unsigned>(2 * m);
  BigInt r = mp::sqrt(scaled);
  BigInt denom = d << static_cast<unsigned>(m);
  Enclosure raw(Rational(r, denom), Rational(r + 1, denom));
  return raw.round_outward(prec_bits + 4);
}

Enclosure sqrt2_enclosure(int prec_bits) { return sqrt_enclosure(Rational(2), prec_bits); }

namespace {

struct ReducedAngle {
  bool use_cos;  // evaluate cos instead of sin at the reduced angle
  int sign;
  Rational delta;  // in [0, 1/8]; the angle is 2*pi*delta
};

// Exact reduction of sin(2*pi*r) / cos(2*pi*r) to +-sin/cos(2*pi*delta),
// delta in [0, 1/8]: mod 1, then quadrant, then octant fold. No rounding.
ReducedAngle reduce_angle(const Rational& r, bool want_sin) {
  Rational t = r - Rational(r.floor());
  long q = (t * Rational(4)).floor().convert_to<long>();  // 0..3
  Rational delta0 = t - Rational(q, 4);
  bool swap = delta0 > Rational(1, 8);
  Rational delta = swap ? Rational(1, 4) - delta0 : delta0;

  bool base_sin;
  int sign;
  if (want_sin) {
    base_sin = (q % 2 == 0);
    sign = q <= 1 ? 1 : -1;
  } else {
    base_sin = (q % 2 == 1);
    sign = (q == 0 || q == 3) ? 1 : -1;
  }
  if (swap) base_sin = !base_sin;
  return ReducedAngle{!base_sin, sign, std::move(delta)};
}

// Maclaurin bracket of sin(theta) or cos(theta) for theta in a narrow interval
// inside [0, pi/4 + eps]; terms decrease strictly there, so the alternating
// remainder bound applies from the first term.
//
// The series runs in fixed point: integers scaled by 2^W, every division a
// floor.  Each floor loses less than one ulp and later factors t^2/(a*b) are
// below 1, so the computed term underestimates the true term by at most
// 2k ulp; the drift over the whole sum stays under K*(K+1) ulp.  Those counts
// go into the error budget alongside the alternating-series remainder and the
// Lipschitz-1 midpoint slack, so the bracket stays valid while the hot loop
// never normalizes a fraction.
Enclosure sin_or_cos_series(const Enclosure& theta, bool use_cos, int prec_bits) {
  const int W = prec_bits + 24;
  const BigInt one = BigInt(1) << static_cast<unsigned>(W);
  const BigInt cutoff = BigInt(1) << 18;  // == 2^(W - prec_bits - 6)

  // M/2^W <= theta.midpoint() < M/2^W + 2^-W; the truncation joins the
  // half-width in the Lipschitz slack.
  Rational mid = theta.midpoint();
  BigInt M = (mid.num() << static_cast<unsigned>(W)) / mid.den();
  Rational slack = (theta.width() / Rational(2)) + Rational::pow2(-W);

  BigInt t2 = (M * M) >> static_cast<unsigned>(W);  // floor(t^2 * 2^W)
  BigInt term = use_cos ? one : M;
  BigInt sum = 0;
  long k = 0;
  while (term > cutoff) {
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    ++k;
    long a = use_cos ? 2 * k - 1 : 2 * k;
    long b = a + 1;
    term = (term * t2) / (one * (BigInt(a) * b));
  }
  // remainder: first omitted true term <= term/2^W + 2k ulp; drift <= k(k+1) ulp
  BigInt err_int = term + BigInt(2 * k) + BigInt(k) * (k + 1);
  Rational err = Rational(err_int, one) + slack;
  Rational centre(sum, one);
  return Enclosure(centre - err, centre + err).round_outward(prec_bits + 2);
}

Enclosure trig2pi(const Rational& r, bool want_sin, int prec_bits) {
  ReducedAngle red = reduce_angle(r, want_sin);
  Enclosure core;
  if (red.delta.is_zero()) {
    core = Enclosure::point(Rational(red.use_cos ? 1 : 0));
  } else {
    Enclosure two_pi = pi_enclosure(prec_bits + 10).scale(Rational(2));
    Enclosure theta(two_pi.lo * red.delta, two_pi.hi * red.delta);
    core = sin_or_cos_series(theta, red.use_cos, prec_bits);
  }
  return red.sign > 0 ? core : -core;
}

}  // namespace

Enclosure sin2pi(const Rational& r, int prec_bits) { return trig2pi(r, true, prec_bits); }
Enclosure cos2pi(const Rational& r, int prec_bits) { return trig2pi(r, false, prec_bits); }

Enclosure bracket(const QuadraticIrrational& x, int prec_bits) {
  Rational aq = x.q().abs();
  long bits = 0;
  BigInt c = aq.ceil();
  if (c > 1) bits = static_cast<long>(mp::msb(c)) + 1;
  Enclosure s2 = sqrt2_enclosure(static_cast<int>(prec_bits + 2 + bits));
  return Enclosure::point(x.p()) + s2.scale(x.q());
}

}  // namespace dlab
