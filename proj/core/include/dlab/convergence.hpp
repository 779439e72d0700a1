#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dlab/enclosure.hpp"
#include "dlab/interval.hpp"
#include "dlab/piecewise.hpp"
#include "dlab/quadratic.hpp"
#include "dlab/rational.hpp"
#include "dlab/sequences.hpp"

namespace dlab {

// Integral of |term_j - term_m| over [0,1] (j < m): exact for the finite
// kinds, a certified enclosure for the symbolic tail family.
EvalResult pairwise_l1_distance(const SequenceKind& kind, std::uint64_t j, std::uint64_t m);

struct CauchyModulus {
  std::uint64_t N = 0;
  EvalResult bound_at_N;   // certified bound on every pairwise distance beyond N
  std::string certificate; // the rule the bound instantiates
  std::string note;        // context about the limit object
};

// Least N whose certified pairwise bound meets eps.  The sliding-block kind is
// rejected: its terms are not L1-Cauchy toward anything but the zero class,
// which l1_limit_defect reports directly.
CauchyModulus cauchy_modulus(const SequenceKind& kind, const Rational& eps);

// Enclosure of || limit - term_k ||_1, probed at truncation probe_m > k.
Enclosure l1_limit_defect(const SequenceKind& kind, std::uint64_t k, std::uint64_t probe_m);

enum class ConvergenceMode {
  PointwiseStabilized,
  Oscillating,
  InMeasureToZero,
  CauchyL1,
  L1Converged,
};
std::string to_string(ConvergenceMode mode);

struct TraceEntry {
  std::uint64_t index = 0;
  std::optional<Rational> value;   // exact term value at the probe
  std::optional<Enclosure> box;    // certified value when not rational
  std::optional<Rational> measure; // measure column for in-measure traces
};

// Evidence that a dyadic block contains both values.
struct OscillationBlock {
  std::uint64_t block = 0;                 // block exponent n (indices 2^n .. 2^{n+1}-1)
  std::uint64_t one_index = 0;             // index in the block where the value is 1
  std::optional<std::uint64_t> zero_index; // index with value 0 (exists for n >= 1)
};

struct ConvergenceVerdict {
  ConvergenceMode mode = ConvergenceMode::PointwiseStabilized;
  bool certified = false;
  std::optional<std::uint64_t> stabilized_at;
  std::optional<EvalResult> limit_value;
  std::vector<TraceEntry> trace;
  std::vector<OscillationBlock> blocks;
  std::string note;
};

// Pointwise behaviour of term_j(x) for j = 1..jmax, with exact stabilization
// indices where the sequence provably settles and per-block oscillation
// witnesses where it provably does not.
ConvergenceVerdict pointwise_profile(const SequenceKind& kind, const Rational& x,
                                     std::uint64_t jmax);
ConvergenceVerdict pointwise_profile(const SequenceKind& kind, const QuadraticIrrational& x,
                                     std::uint64_t jmax);

// Exact measure of {x : |term_j(x)| >= eps} for j = 1..jmax.
std::vector<std::pair<std::uint64_t, Rational>> in_measure_profile(const SequenceKind& kind,
                                                                   const Rational& eps,
                                                                   std::uint64_t jmax);

enum class DominationMode { AlmostEverywhere, Everywhere };

struct DominationReport {
  bool dominated = false;
  DominationMode mode = DominationMode::AlmostEverywhere;
  std::optional<std::size_t> violating_term; // index into `terms`
  std::optional<Interval> violation_cell;    // positive-measure cell where |f| > g
  std::optional<Rational> violation_point;   // single-point violation (Everywhere mode)
  std::optional<Rational> term_value;        // f value on the violation
  std::optional<Rational> bound_value;       // g value there
};

// Exact decision of |f_j| <= g for every term: on constant cells of a common
// refinement (a.e. mode) and additionally at every breakpoint and exceptional
// point (everywhere mode).  Symbolic tail terms are rejected.
DominationReport dominated_check(const std::vector<PiecewiseFn>& terms, const StepFunction& g,
                                 DominationMode mode);

struct SequenceNotes {
  std::string l1_limit;  // description of the L1 limit object
  bool limit_improperly_riemann_integrable = false;
  std::string detail;
};
SequenceNotes sequence_notes(const SequenceKind& kind);

}  // namespace dlab
