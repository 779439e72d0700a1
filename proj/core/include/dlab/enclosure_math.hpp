#pragma once

#include "dlab/enclosure.hpp"
#include "dlab/quadratic.hpp"

namespace dlab {

// Certified enclosures of the constants and elementary functions the library
// needs. Every result carries the true value strictly inside rational bounds
// of width <= 2^-prec_bits, computed deterministically.

// pi via Machin's identity, alternating-series bracketing, cached per precision.
Enclosure pi_enclosure(int prec_bits);

// sqrt(x) for x >= 0, via scaled integer square roots.
Enclosure sqrt_enclosure(const Rational& x, int prec_bits);

Enclosure sqrt2_enclosure(int prec_bits);

// sin(2*pi*r) and cos(2*pi*r) for exact rational r. Argument reduction mod 1
// and into the first octant is exact rational arithmetic; only the final
// series evaluation carries enclosure error.
Enclosure sin2pi(const Rational& r, int prec_bits);
Enclosure cos2pi(const Rational& r, int prec_bits);

// Rational bracket of p + q*sqrt2.
Enclosure bracket(const QuadraticIrrational& x, int prec_bits);

}  // namespace dlab
