#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlab/interval.hpp"
#include "dlab/interval_set.hpp"
#include "dlab/piecewise.hpp"
#include "dlab/rational.hpp"

namespace dlab {

// Fixed enumeration of the rationals in [0,1]: 0, 1, then reduced p/q grouped
// by ascending denominator, numerators ascending within a group:
//   j=1: 0   j=2: 1   j=3: 1/2   j=4: 1/3   j=5: 2/3   j=6: 1/4   j=7: 3/4 ...
// Every construction below that speaks of "the j-th rational" means this order.
Rational enumerate_rationals(std::uint64_t j);  // 1-based

// Prefix [enumerate_rationals(1), ..., enumerate_rationals(count)].
std::vector<Rational> first_rationals(std::uint64_t count);

// Inverse of enumerate_rationals.  Throws std::domain_error outside [0,1] or
// when the reduced denominator exceeds an internal safety bound.
std::uint64_t rational_rank(const Rational& r);

// Width budget for a fat cover of the rationals; must satisfy 0 < ell < 1.
struct FatCoverConfig {
  Rational ell;
  explicit FatCoverConfig(Rational l);
  friend bool operator==(const FatCoverConfig&, const FatCoverConfig&) = default;
};

// Open interval of length ell/2^j centred at the j-th rational, clipped to the
// ambient [0,1].  A clipped endpoint becomes closed, so every ambient point the
// unclipped interval covered stays covered.
Interval fat_interval(const FatCoverConfig& cfg, std::uint64_t j);

// Union of the first k fat intervals (k = 0 gives the empty set).  Its measure
// stays strictly below ell for every k.
IntervalSet fat_union(const FatCoverConfig& cfg, std::uint64_t k);

// ell/2^k: bounds both the measure the union at stage k is still missing and
// the L1 distance between stage-k and any later stage.
Rational fat_tail_bound(const FatCoverConfig& cfg, std::uint64_t k);

// Support of the j-th sliding-block ("typewriter") term: block n holds indices
// j = 2^n .. 2^{n+1}-1, and j = 2^n + i gives the closed cell [i/2^n, (i+1)/2^n].
Interval typewriter_support(std::uint64_t j);

// Ascending indices j <= jmax whose typewriter support contains x; a shared
// dyadic boundary belongs to both adjacent cells.
std::vector<std::uint64_t> typewriter_hits(const Rational& x, std::uint64_t jmax);

enum class SequenceFamily {
  RationalPoints,  // k-th term: 1 at the first k enumerated rationals, else 0
  FatCover,        // k-th term: indicator of fat_union(cfg, k)
  Typewriter,      // j-th term: indicator of typewriter_support(j)
  Kurtz,           // j-th term: 0 on [0, 1/j], x^{-1/2} on (1/j, 1]
};

// Family plus the parameters needed to build terms.
struct SequenceKind {
  SequenceFamily family;
  std::optional<FatCoverConfig> cover;  // engaged iff family == FatCover

  static SequenceKind rational_points();
  static SequenceKind fat_cover(Rational ell);
  static SequenceKind typewriter();
  static SequenceKind kurtz();

  const Rational& ell() const;  // throws std::logic_error unless FatCover

  friend bool operator==(const SequenceKind&, const SequenceKind&) = default;
};

// Command-line tokens: "F" (rational points), "G" (fat cover), "typewriter",
// "kurtz".
std::optional<SequenceFamily> parse_sequence_family(std::string_view token);
std::string to_token(SequenceFamily family);

// The j-th term of the sequence (j >= 1).
PiecewiseFn sequence_term(const SequenceKind& kind, std::uint64_t j);

}  // namespace dlab
