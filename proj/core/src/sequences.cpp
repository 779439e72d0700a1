#include "dlab/sequences.hpp"

#include <bit>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace dlab {
namespace {

std::mutex enum_mutex;
std::vector<Rational> enum_cache;     // enum_cache[i] = (i+1)-th rational
std::uint64_t enum_next_den = 2;      // next denominator group to append

std::mutex phi_mutex;
// phi_prefix[d] = totient(2) + ... + totient(d); entries 0 and 1 are 0.
std::vector<std::uint64_t> phi_prefix;

void ensure_phi_prefix(std::uint64_t q) {
  if (phi_prefix.size() > q) return;
  std::size_t n = 1 << 14;
  while (n <= q) n *= 2;
  std::vector<std::uint32_t> phi(n + 1);
  for (std::size_t i = 0; i <= n; ++i) phi[i] = static_cast<std::uint32_t>(i);
  for (std::size_t p = 2; p <= n; ++p) {
    if (phi[p] == p) {  // prime
      for (std::size_t m = p; m <= n; m += p) phi[m] -= phi[m] / p;
    }
  }
  phi_prefix.assign(n + 1, 0);
  for (std::size_t d = 2; d <= n; ++d) phi_prefix[d] = phi_prefix[d - 1] + phi[d];
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      primes.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

// #{x in [1, p] : gcd(x, q) = 1} by inclusion-exclusion over q's prime factors.
std::uint64_t coprime_count_up_to(std::uint64_t p, std::uint64_t q) {
  std::vector<std::uint64_t> primes = distinct_prime_factors(q);
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << primes.size()); ++mask) {
    std::uint64_t prod = 1;
    bool odd = false;
    for (std::size_t b = 0; b < primes.size(); ++b) {
      if (mask & (std::uint64_t{1} << b)) {
        prod *= primes[b];
        odd = !odd;
      }
    }
    count += odd ? -(p / prod) : (p / prod);
  }
  return count;
}

}  // namespace

Rational enumerate_rationals(std::uint64_t j) {
  if (j == 0) throw std::invalid_argument("enumeration is 1-based");
  std::lock_guard<std::mutex> lock(enum_mutex);
  if (enum_cache.empty()) {
    enum_cache.push_back(Rational(0));
    enum_cache.push_back(Rational(1));
  }
  while (enum_cache.size() < j) {
    for (std::uint64_t p = 1; p < enum_next_den; ++p)
      if (std::gcd(p, enum_next_den) == 1)
        enum_cache.push_back(Rational(BigInt(p), BigInt(enum_next_den)));
    ++enum_next_den;
  }
  return enum_cache[j - 1];
}

std::vector<Rational> first_rationals(std::uint64_t count) {
  if (count == 0) return {};
  enumerate_rationals(count);  // grow the cache once
  std::lock_guard<std::mutex> lock(enum_mutex);
  return std::vector<Rational>(enum_cache.begin(), enum_cache.begin() + count);
}

std::uint64_t rational_rank(const Rational& r) {
  if (r.is_negative() || r > Rational(1)) throw std::domain_error("rank is defined on [0,1]");
  if (r.is_zero()) return 1;
  if (r == Rational(1)) return 2;
  if (r.den() > 1000000) throw std::domain_error("rank query denominator too large");
  std::uint64_t q = r.den().convert_to<std::uint64_t>();
  std::uint64_t p = r.num().convert_to<std::uint64_t>();
  std::uint64_t base;
  {
    std::lock_guard<std::mutex> lock(phi_mutex);
    ensure_phi_prefix(q);
    base = phi_prefix[q - 1];
  }
  return 2 + base + coprime_count_up_to(p, q);
}

FatCoverConfig::FatCoverConfig(Rational l) : ell(std::move(l)) {
  if (!ell.is_positive() || ell >= Rational(1))
    throw std::invalid_argument("cover width must lie strictly between 0 and 1");
}

Interval fat_interval(const FatCoverConfig& cfg, std::uint64_t j) {
  if (j == 0) throw std::invalid_argument("fat intervals are 1-based");
  Rational centre = enumerate_rationals(j);
  Rational radius = cfg.ell * Rational::pow2(-static_cast<long>(j) - 1);
  Rational lo_raw = centre - radius;
  Rational hi_raw = centre + radius;
  bool lo_clipped = lo_raw.is_negative();
  bool hi_clipped = hi_raw > Rational(1);
  return Interval::make(lo_clipped ? Rational(0) : lo_raw, hi_clipped ? Rational(1) : hi_raw,
                        lo_clipped, hi_clipped);
}

IntervalSet fat_union(const FatCoverConfig& cfg, std::uint64_t k) {
  std::vector<Interval> parts;
  parts.reserve(k);
  for (std::uint64_t j = 1; j <= k; ++j) parts.push_back(fat_interval(cfg, j));
  return IntervalSet(std::move(parts));
}

Rational fat_tail_bound(const FatCoverConfig& cfg, std::uint64_t k) {
  return cfg.ell * Rational::pow2(-static_cast<long>(k));
}

Interval typewriter_support(std::uint64_t j) {
  if (j == 0) throw std::invalid_argument("typewriter terms are 1-based");
  int n = std::bit_width(j) - 1;
  std::uint64_t i = j - (std::uint64_t{1} << n);
  BigInt den = BigInt(1) << n;
  return Interval::closed(Rational(BigInt(i), den), Rational(BigInt(i + 1), den));
}

std::vector<std::uint64_t> typewriter_hits(const Rational& x, std::uint64_t jmax) {
  if (x.is_negative() || x > Rational(1)) throw std::domain_error("evaluation point outside [0,1]");
  std::vector<std::uint64_t> hits;
  for (int n = 0; (std::uint64_t{1} << n) <= jmax; ++n) {
    BigInt den = BigInt(1) << n;
    BigInt i0 = floor_div(x.num() * den, x.den());
    for (BigInt c = i0 - 1; c <= i0; ++c) {
      if (c < 0 || c >= den) continue;
      Rational lo(c, den), hi(c + 1, den);
      if (lo <= x && x <= hi) {
        std::uint64_t j = (std::uint64_t{1} << n) + c.convert_to<std::uint64_t>();
        if (j <= jmax) hits.push_back(j);
      }
    }
  }
  return hits;
}

SequenceKind SequenceKind::rational_points() { return {SequenceFamily::RationalPoints, std::nullopt}; }
SequenceKind SequenceKind::fat_cover(Rational ell) {
  return {SequenceFamily::FatCover, FatCoverConfig(std::move(ell))};
}
SequenceKind SequenceKind::typewriter() { return {SequenceFamily::Typewriter, std::nullopt}; }
SequenceKind SequenceKind::kurtz() { return {SequenceFamily::Kurtz, std::nullopt}; }

const Rational& SequenceKind::ell() const {
  if (!cover) throw std::logic_error("only the fat-cover family carries a width parameter");
  return cover->ell;
}

std::optional<SequenceFamily> parse_sequence_family(std::string_view token) {
  if (token == "F") return SequenceFamily::RationalPoints;
  if (token == "G") return SequenceFamily::FatCover;
  if (token == "typewriter") return SequenceFamily::Typewriter;
  if (token == "kurtz") return SequenceFamily::Kurtz;
  return std::nullopt;
}

std::string to_token(SequenceFamily family) {
  switch (family) {
    case SequenceFamily::RationalPoints: return "F";
    case SequenceFamily::FatCover: return "G";
    case SequenceFamily::Typewriter: return "typewriter";
    case SequenceFamily::Kurtz: return "kurtz";
  }
  throw std::logic_error("unreachable");
}

PiecewiseFn sequence_term(const SequenceKind& kind, std::uint64_t j) {
  if (j == 0) throw std::invalid_argument("sequence terms are 1-based");
  switch (kind.family) {
    case SequenceFamily::RationalPoints: {
      std::vector<PointValue> exceptions;
      exceptions.reserve(j);
      for (const Rational& q : first_rationals(j)) exceptions.push_back({q, Rational(1)});
      return StepFunction({}, std::move(exceptions));
    }
    case SequenceFamily::FatCover:
      return StepFunction::indicator(fat_union(*kind.cover, j));
    case SequenceFamily::Typewriter:
      return StepFunction::indicator(IntervalSet::of(typewriter_support(j)));
    case SequenceFamily::Kurtz:
      if (j > std::uint64_t{1} << 62) throw std::invalid_argument("index too large");
      return KurtzTail{static_cast<long>(j)};
  }
  throw std::logic_error("unreachable");
}

}  // namespace dlab
