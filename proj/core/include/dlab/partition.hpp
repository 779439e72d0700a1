#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dlab/rational.hpp"

namespace dlab {

// Finite partition of [0,1]: rational breakpoints 0 = x0 < x1 < ... < xn = 1.
class Partition {
 public:
  // Throws std::invalid_argument unless the points start at 0, end at 1, and
  // strictly increase.  Input may be unsorted; duplicates are rejected.
  static Partition from_breakpoints(std::vector<Rational> points);

  // Breakpoints i/n for i = 0..n (n >= 1 cells).
  static Partition uniform(std::uint64_t n);

  // n cells whose n-1 interior breakpoints are distinct seeded draws p/q with
  // q in [2, den_bound] and p in [1, q-1].  Same seed, same partition.
  static Partition random(std::uint64_t n, std::uint64_t seed,
                          std::uint64_t den_bound = 4096);

  const std::vector<Rational>& points() const { return pts_; }
  std::size_t cells() const { return pts_.size() - 1; }

  // Endpoints (x_{i-1}, x_i) of the i-th cell, zero-based.
  std::pair<Rational, Rational> cell(std::size_t i) const {
    return {pts_[i], pts_[i + 1]};
  }

  Rational mesh() const;  // widest cell

  // Merged breakpoint sets (a refinement of both inputs).
  static Partition common_refinement(const Partition& a, const Partition& b);

  // True when every breakpoint of `coarser` is a breakpoint here.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition& a, const Partition& b) = default;

  std::string to_string() const;

 private:
  explicit Partition(std::vector<Rational> sorted) : pts_(std::move(sorted)) {}
  std::vector<Rational> pts_;
};

}  // namespace dlab
