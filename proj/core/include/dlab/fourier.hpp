#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dlab/convergence.hpp"
#include "dlab/enclosure.hpp"
#include "dlab/interval_set.hpp"
#include "dlab/rational.hpp"
#include "dlab/sequences.hpp"

namespace dlab {

// Rectangular box certified to contain a complex value.
struct ComplexEnclosure {
  Enclosure re;
  Enclosure im;

  ComplexEnclosure conjugate() const { return {re, -im}; }
  Enclosure abs_squared() const { return re.square() + im.square(); }
  bool intersects(const ComplexEnclosure& o) const {
    return re.intersects(o.re) && im.intersects(o.im);
  }
};

enum class TransformDirection { Forward, Inverse };  // kernel e^{-2pi i f t} / e^{+2pi i f t}

// The integrand side of a transform evaluation: the indicator of a finite
// union of intervals in [0,1] — a truncated fat cover, or the plain unit
// interval as the integrable control case.
class TransformProbe {
 public:
  static TransformProbe fat_cover(FatCoverConfig cfg, std::uint64_t k,
                                  TransformDirection direction = TransformDirection::Inverse);
  static TransformProbe single_interval(
      TransformDirection direction = TransformDirection::Inverse);

  const IntervalSet& support() const { return support_; }
  TransformDirection direction() const { return direction_; }
  const std::optional<FatCoverConfig>& cover_config() const { return cfg_; }
  std::uint64_t depth() const { return k_; }

  // L1 mass the truncation may be missing relative to the full cover:
  // ell * 2^-k for fat covers, 0 for the control interval.
  Rational truncation_slack() const;

  // Ask transform_value to widen its box by the truncation slack, so it
  // encloses the transform of the untruncated limit object as well.
  TransformProbe with_untruncated_target() const;
  bool untruncated_target() const { return untruncated_target_; }

 private:
  TransformProbe(IntervalSet support, std::optional<FatCoverConfig> cfg, std::uint64_t k,
                 TransformDirection direction);

  IntervalSet support_;
  std::optional<FatCoverConfig> cfg_;
  std::uint64_t k_ = 1;
  TransformDirection direction_ = TransformDirection::Inverse;
  bool untruncated_target_ = false;
};

// Sum over support components [a,b] of the kernel antiderivative
// (e^{su i b} - e^{su i a})/(su i) at u = 2*pi*freq, s the direction sign;
// exactly the support measure at freq = 0. Trig enclosures carry width
// <= 2^-prec.
ComplexEnclosure transform_value(const TransformProbe& p, const Rational& freq, int prec);

// Rational certified bound on |transform_value|: components/(pi * |freq|),
// computed with a fixed rational lower bound of pi so that doubling the
// frequency halves the bound exactly.
Rational decay_bound(const TransformProbe& p, const Rational& freq);

struct PlancherelReport {
  Enclosure partial;        // certified enclosure of the square-integral over [-R, R]
  Rational target;          // support measure = squared seminorm of the indicator
  Rational tail_bound;      // certified bound on the square-integral beyond [-R, R]
  bool brackets_target = false;  // target in [partial.lo, partial.hi + tail_bound]
  Rational slack;                // length of that bracketing interval
};

// Quadrature of |transform|^2 over [-R, R] (midpoint rule with a certified
// second-derivative remainder on each cell, n cells across [-R, R]), plus a
// tail bound, checked against the exact squared seminorm of the indicator.
PlancherelReport plancherel_probe(const TransformProbe& p, const Rational& R, std::uint64_t n);

// Partial square-integrals along an increasing list of cutoffs: certifies
// they are consistent with a nondecreasing sequence and bounded by the
// support measure — the improper-square-integrability criterion. Trace rows
// carry the cutoff in `value` and the partial integral in `box`.
ConvergenceVerdict improper_l2_profile(const TransformProbe& p,
                                       const std::vector<Rational>& R_list, std::uint64_t n);

struct RiemannDefectReport {
  ConvergenceVerdict l2_profile;  // the transform side: improperly square-integrable
  Rational truncation_slack;      // missing cover mass at depth k
  Enclosure gap;                  // Darboux gap certificate of the indicator side
  bool defect = false;            // gap bounded away from 0 while the profile certifies
  std::string domain_note;
  std::string conclusion;
};

// The headline comparison: the transform of the indicator passes the improper
// square-integrability criterion at every truncation, while the indicator
// itself (equal to its own square) keeps a Darboux gap of at least 1 - ell.
RiemannDefectReport riemann_defect_summary(const TransformProbe& p, std::uint64_t K_gap,
                                           const std::vector<Rational>& R_list = {
                                               Rational(8), Rational(16), Rational(32),
                                               Rational(64)},
                                           std::uint64_t n = 1024);
RiemannDefectReport riemann_defect_summary(const FatCoverConfig& cfg, std::uint64_t k,
                                           std::uint64_t K_gap);

}  // namespace dlab
