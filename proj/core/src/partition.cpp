#include "dlab/partition.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dlab/prng.hpp"

namespace dlab {

Partition Partition::from_breakpoints(std::vector<Rational> points) {
  if (points.size() < 2) throw std::invalid_argument("partition needs at least two breakpoints");
  std::sort(points.begin(), points.end());
  if (points.front() != Rational(0) || points.back() != Rational(1))
    throw std::invalid_argument("partition must span [0,1]");
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i - 1] == points[i])
      throw std::invalid_argument("partition breakpoints must be distinct");
  return Partition(std::move(points));
}

Partition Partition::uniform(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform partition needs n >= 1");
  std::vector<Rational> pts;
  pts.reserve(n + 1);
  for (std::uint64_t i = 0; i <= n; ++i) pts.push_back(Rational(BigInt(i), BigInt(n)));
  return Partition(std::move(pts));
}

Partition Partition::random(std::uint64_t n, std::uint64_t seed, std::uint64_t den_bound) {
  if (n == 0) throw std::invalid_argument("random partition needs n >= 1");
  if (den_bound < 2) throw std::invalid_argument("random partition needs den_bound >= 2");
  SplitMix64 rng(seed);
  std::set<Rational> interior;
  while (interior.size() < n - 1) {
    std::uint64_t q = 2 + rng.below(den_bound - 1);  // 2..den_bound
    std::uint64_t p = 1 + rng.below(q - 1);          // 1..q-1
    interior.insert(Rational(BigInt(p), BigInt(q)));
  }
  std::vector<Rational> pts;
  pts.reserve(n + 1);
  pts.push_back(Rational(0));
  pts.insert(pts.end(), interior.begin(), interior.end());
  pts.push_back(Rational(1));
  return Partition(std::move(pts));
}

Rational Partition::mesh() const {
  Rational widest(0);
  for (std::size_t i = 0; i + 1 < pts_.size(); ++i)
    widest = max(widest, pts_[i + 1] - pts_[i]);
  return widest;
}

Partition Partition::common_refinement(const Partition& a, const Partition& b) {
  std::vector<Rational> merged;
  merged.reserve(a.pts_.size() + b.pts_.size());
  std::merge(a.pts_.begin(), a.pts_.end(), b.pts_.begin(), b.pts_.end(),
             std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return Partition(std::move(merged));
}

bool Partition::refines(const Partition& coarser) const {
  return std::includes(pts_.begin(), pts_.end(), coarser.pts_.begin(), coarser.pts_.end());
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    if (i) out << ", ";
    out << pts_[i].to_fraction_string();
  }
  out << "}";
  return out.str();
}

}  // namespace dlab
