#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "dlab/enclosure.hpp"
#include "dlab/interval_set.hpp"

namespace dlab {

struct StepPiece {
  Interval where;
  Rational value;
  friend bool operator==(const StepPiece&, const StepPiece&) = default;
};

struct PointValue {
  Rational at;
  Rational value;
  friend bool operator==(const PointValue&, const PointValue&) = default;
};

// Rational-valued step function on [0,1]: finitely many constant pieces,
// default 0 elsewhere, finitely many exceptional point values overriding both.
// Stored in a canonical form (maximal constant runs; leftover nonzero point
// values as exceptions), so two constructions of the same pointwise function
// compare equal structurally.
class StepFunction {
 public:
  StepFunction() = default;  // identically zero
  StepFunction(std::vector<StepPiece> pieces, std::vector<PointValue> exceptions);

  static StepFunction indicator(const IntervalSet& s);
  static StepFunction constant(const Rational& c);

  const std::vector<StepPiece>& pieces() const { return pieces_; }
  const std::vector<PointValue>& exceptions() const { return exceptions_; }

  Rational eval(const Rational& x) const;            // x in [0,1]
  Rational eval(const QuadraticIrrational& x) const;  // exceptions never match

  // Exact integral of |f|; pieces only (null sets contribute nothing).
  Rational seminorm_l1() const;

  // a*f + b*g on the common breakpoint refinement, exact everywhere.
  static StepFunction linear_combine(const Rational& a, const StepFunction& f,
                                     const Rational& b, const StepFunction& g);

  // All piece endpoints and exception points, with 0 and 1, sorted.
  std::vector<Rational> breakpoints() const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  std::vector<StepPiece> pieces_;       // sorted, disjoint, nonzero, nondegenerate
  std::vector<PointValue> exceptions_;  // sorted by point
};

// f_j: 0 on [0, 1/j], x^(-1/2) on (1/j, 1]. The j-th tail of the standard
// improperly-integrable-yet-unbounded example.
struct KurtzTail {
  long j = 1;
  friend bool operator==(const KurtzTail&, const KurtzTail&) = default;
};

using PiecewiseFn = std::variant<StepFunction, KurtzTail>;
using EvalResult = std::variant<Rational, Enclosure>;

EvalResult eval(const PiecewiseFn& f, const Rational& x);
EvalResult eval(const PiecewiseFn& f, const QuadraticIrrational& x);

// Step: exact Rational. KurtzTail: Enclosure of 2*(1 - j^(-1/2)), width <= 2^-60.
EvalResult seminorm_l1(const PiecewiseFn& f);

// Both arguments must be Step; combining tails is rejected.
PiecewiseFn linear_combine(const Rational& a, const PiecewiseFn& f, const Rational& b,
                           const PiecewiseFn& g);

// Almost-everywhere equality: exact for Step pairs (difference has empty piece
// list), structural for tails, false across kinds.
bool ae_equal(const PiecewiseFn& f, const PiecewiseFn& g);

// An L1 equivalence class, carried by a representative.
struct AeClass {
  PiecewiseFn representative;
  friend bool operator==(const AeClass& a, const AeClass& b) {
    return ae_equal(a.representative, b.representative);
  }
};

}  // namespace dlab
