#pragma once

#include "dlab/interval.hpp"
#include "dlab/quadratic.hpp"

namespace dlab {

// The rational in J with minimal denominator (ties broken by smaller
// numerator), found by continued-fraction descent. A degenerate J returns its
// point when closed and raises std::domain_error when an endpoint is excluded.
Rational simplest_rational_in(const Interval& J);

// Canonical irrational strictly inside a nondegenerate J:
// midpoint + (width/4)*sqrt2, verified strictly interior by exact comparison.
QuadraticIrrational irrational_in(const Interval& J);

}  // namespace dlab
