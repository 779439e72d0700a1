#pragma once

#include <vector>

#include "dlab/interval.hpp"

namespace dlab {

enum class SetOp { Union, Intersect, Difference };

// Finite union of intervals in [0,1], kept normalized: components sorted,
// pairwise disjoint, and unmergeable (no two can be joined into one interval,
// flags included). Degenerate point components are allowed.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> raw) { comps_ = normalize(std::move(raw)); }
  static IntervalSet of(const Interval& iv) { return IntervalSet(std::vector<Interval>{iv}); }

  static std::vector<Interval> normalize(std::vector<Interval> raw);

  const std::vector<Interval>& components() const { return comps_; }
  bool empty() const { return comps_.empty(); }
  std::size_t size() const { return comps_.size(); }

  // Exact Lebesgue measure: sum of component lengths (flag-insensitive).
  Rational measure() const;

  bool contains(const Rational& x) const;
  bool contains(const QuadraticIrrational& x) const;

  IntervalSet complement() const;  // within the ambient [0,1]

  static IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
  static IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
  static IntervalSet difference(const IntervalSet& a, const IntervalSet& b);

  friend bool operator==(const IntervalSet& a, const IntervalSet& b) = default;

  std::string to_string() const;

 private:
  std::vector<Interval> comps_;
};

IntervalSet set_op(const IntervalSet& a, const IntervalSet& b, SetOp op);

}  // namespace dlab
