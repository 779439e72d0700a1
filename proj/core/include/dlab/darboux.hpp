#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "dlab/enclosure.hpp"
#include "dlab/interval.hpp"
#include "dlab/partition.hpp"
#include "dlab/piecewise.hpp"
#include "dlab/quadratic.hpp"
#include "dlab/rational.hpp"
#include "dlab/sequences.hpp"

namespace dlab {

// What the certification engine is asked about.  A step function is finite
// data and admits exact sums.  The two indicator descriptors stand for limit
// objects (indicator of a countable-union fat cover, indicator of the
// rationals) that have no finite representation: they are only ever probed
// through truncations and per-cell certificates.
struct StepDescriptor {
  StepFunction fn;
  friend bool operator==(const StepDescriptor&, const StepDescriptor&) = default;
};
struct FatCoverDescriptor {
  FatCoverConfig cfg;
  friend bool operator==(const FatCoverDescriptor&, const FatCoverDescriptor&) = default;
};
struct RationalsIndicatorDescriptor {
  friend bool operator==(const RationalsIndicatorDescriptor&,
                         const RationalsIndicatorDescriptor&) = default;
};
using FunctionDescriptor =
    std::variant<StepDescriptor, FatCoverDescriptor, RationalsIndicatorDescriptor>;

enum class WitnessRole { Sup, Inf };

enum class CertMethod {
  ExactRange,       // step function: the stated value is attained at `point`
  RationalPoint,    // value attained at an explicit rational strictly inside the cell
  IrrationalPoint,  // value attained at an explicit quadratic irrational inside the cell
  InsideCover,      // the open cell lies inside one component of the truncated cover
  EscapesCover,     // cell minus truncated cover out-measures the tail budget
  Unresolved,       // neither cover certificate applies at this truncation depth
};

// Per-cell certificate backing one of the two Darboux sums.
struct CellWitness {
  std::size_t cell_index = 0;
  Rational cell_lo, cell_hi;
  WitnessRole role = WitnessRole::Sup;
  CertMethod method = CertMethod::ExactRange;
  std::optional<Rational> point;                   // rational witness point
  std::optional<QuadraticIrrational> irrational;   // irrational witness point
  std::optional<std::uint64_t> enumeration_index;  // rank of `point` in the fixed enumeration
  std::optional<Rational> escape_excess;           // EscapesCover: measure(cell \ cover)
  std::optional<Interval> covering_component;      // InsideCover
  std::optional<Rational> value;                   // certified sup/inf contribution, when exact
};

// A sum is a Rational when computed exactly and an Enclosure when the cell
// verdicts leave a certified bracket only.
using SumValue = std::variant<Rational, Enclosure>;

struct DarbouxReport {
  SumValue upper_sum;
  SumValue lower_sum;
  std::vector<CellWitness> witnesses;
  std::optional<std::uint64_t> truncation_depth;  // depth K, when truncation was involved
};

Rational sum_lower_bound(const SumValue& v);  // lo end (the value itself when exact)
Rational sum_upper_bound(const SumValue& v);

// Upper and lower Darboux sums over P.  Sup/inf are taken over open cells, so
// values at partition breakpoints never contribute; point values strictly
// inside a cell do.  K bounds the cover truncation depth (ignored for step
// functions and for the rationals indicator).
DarbouxReport darboux_sums(const FunctionDescriptor& d, const Partition& P, std::uint64_t K = 20);

// Certified enclosure of (upper Darboux integral - lower Darboux integral).
// Fat cover: [1 - measure(A_K) - ell/2^K, 1 - measure(A_K)], whose lower end
// is >= 1 - ell for every K.  Rationals indicator: [1, 1].  Step function:
// [0, U - L] over the uniform dyadic partition of depth K.
Enclosure riemann_gap_certificate(const FunctionDescriptor& d, std::uint64_t K = 20);

// Finite pointwise edit (x, new value) applied on top of the cover indicator.
struct PointEdit {
  Rational at;
  Rational value;
  friend bool operator==(const PointEdit&, const PointEdit&) = default;
};

struct RobustnessReport {
  DarbouxReport report;     // sums of the edited function over P
  Enclosure gap_before;     // gap certificate of the unedited indicator
  Enclosure gap_after;      // gap certificate of the edited function (same formula applies)
  bool upper_witnesses_avoid_edits = false;
};

// Certifies that finitely many point edits cannot repair integrability: the
// gap certificate is identical before and after, and every sup witness is
// re-chosen (first in enumeration order) to dodge the edited points.
RobustnessReport robustness_probe(const FatCoverDescriptor& d, const std::vector<PointEdit>& edits,
                                  const Partition& P, std::uint64_t K = 20);

// Exact range of a step function over the open cell (a, b), with points
// attaining each end.  Exposed for tests and the report tooling.
struct CellRange {
  Rational sup, inf;
  Rational sup_point, inf_point;
};
CellRange exact_range_on_open_cell(const StepFunction& f, const Rational& a, const Rational& b);

// First rational in the canonical enumeration that lies strictly inside
// (a, b) and avoids `avoid`; returns the point and its enumeration rank.
std::pair<Rational, std::uint64_t> first_allowed_rational_in(
    const Rational& a, const Rational& b, const std::vector<Rational>& avoid);

}  // namespace dlab
