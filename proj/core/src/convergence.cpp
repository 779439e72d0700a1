#include "dlab/convergence.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

#include "dlab/enclosure_math.hpp"
#include "dlab/interval_set.hpp"

namespace dlab {
namespace {

constexpr std::uint64_t kMaxHorizon = 1'000'000;
constexpr std::uint64_t kMaxIndex = std::uint64_t{1} << 62;
constexpr int kSqrtBits = 62;  // pairwise tail enclosures end up below 2^-60

Rational unit_fraction(std::uint64_t j) {
  return Rational(1, static_cast<long long>(j));
}

std::uint64_t floor_log2(std::uint64_t j) {
  return static_cast<std::uint64_t>(std::bit_width(j)) - 1;
}

void check_index_range(std::uint64_t j, std::uint64_t m) {
  if (j < 1 || j >= m) {
    throw std::invalid_argument("pairwise_l1_distance: indices must satisfy 1 <= j < m");
  }
  if (m > kMaxIndex) {
    throw std::invalid_argument("pairwise_l1_distance: index too large");
  }
}

void check_horizon(std::uint64_t jmax, std::uint64_t least) {
  if (jmax < least) {
    throw std::invalid_argument("horizon jmax is below the minimum for this operation");
  }
  if (jmax > kMaxHorizon) {
    throw std::invalid_argument("horizon jmax is too large to trace");
  }
}

// 2 * (j^-1/2 - m^-1/2): the integral of x^-1/2 over (1/m, 1/j].
Enclosure tail_pairwise(std::uint64_t j, std::uint64_t m) {
  Enclosure rj = sqrt_enclosure(unit_fraction(j), kSqrtBits);
  Enclosure rm = sqrt_enclosure(unit_fraction(m), kSqrtBits);
  return (rj - rm).scale(Rational(2));
}

ConvergenceVerdict stabilized_verdict(std::uint64_t at, EvalResult limit, std::string note) {
  ConvergenceVerdict v;
  v.mode = ConvergenceMode::PointwiseStabilized;
  v.certified = true;
  v.stabilized_at = at;
  v.limit_value = std::move(limit);
  v.note = std::move(note);
  return v;
}

void fill_threshold_trace(ConvergenceVerdict& v, std::uint64_t jmax,
                          std::uint64_t threshold, const Rational& before,
                          const EvalResult& after) {
  v.trace.reserve(jmax);
  for (std::uint64_t j = 1; j <= jmax; ++j) {
    TraceEntry e;
    e.index = j;
    if (j < threshold) {
      e.value = before;
    } else if (const Rational* r = std::get_if<Rational>(&after)) {
      e.value = *r;
    } else {
      e.box = std::get<Enclosure>(after);
    }
    v.trace.push_back(std::move(e));
  }
}

ConvergenceVerdict profile_fat_cover(const FatCoverConfig& cfg, const Rational& x,
                                     std::uint64_t jmax) {
  std::optional<std::uint64_t> first_in;
  for (std::uint64_t j = 1; j <= jmax && !first_in; ++j) {
    if (fat_interval(cfg, j).contains(x)) first_in = j;
  }
  std::uint64_t at;
  std::string note;
  if (first_in) {
    at = *first_in;
    note = "first cover interval containing the point; the cover is nested, so the value stays 1";
  } else {
    // x is the centre of its own cover interval, whose index is the
    // enumeration rank; membership holds from that index on.
    at = rational_rank(x);
    note = "no cover interval up to the horizon contains the point; its own centred interval "
           "does, at the enumeration rank recorded here";
  }
  ConvergenceVerdict v = stabilized_verdict(at, EvalResult(Rational(1)), std::move(note));
  fill_threshold_trace(v, jmax, at, Rational(0), EvalResult(Rational(1)));
  return v;
}

ConvergenceVerdict profile_fat_cover(const FatCoverConfig& cfg, const QuadraticIrrational& x,
                                     std::uint64_t jmax) {
  std::optional<std::uint64_t> first_in;
  for (std::uint64_t j = 1; j <= jmax && !first_in; ++j) {
    if (fat_interval(cfg, j).contains(x)) first_in = j;
  }
  ConvergenceVerdict v;
  v.mode = ConvergenceMode::PointwiseStabilized;
  if (first_in) {
    v = stabilized_verdict(*first_in, EvalResult(Rational(1)),
                           "first cover interval containing the irrational point");
    fill_threshold_trace(v, jmax, *first_in, Rational(0), EvalResult(Rational(1)));
  } else {
    v.certified = false;
    v.note = "membership of the irrational point in the limit cover is undetermined at this "
             "horizon; the trace is 0 throughout";
    fill_threshold_trace(v, jmax, jmax + 1, Rational(0), EvalResult(Rational(0)));
  }
  return v;
}

// One-past index sets for the sliding-block trace, plus per-block witnesses.
ConvergenceVerdict oscillating_verdict(const std::vector<std::uint64_t>& hits,
                                       std::uint64_t jmax) {
  ConvergenceVerdict v;
  v.mode = ConvergenceMode::Oscillating;
  v.certified = true;
  v.note = "every complete dyadic index block up to the horizon contains an index where the "
           "value is 1; blocks past the first also contain one where it is 0";
  v.trace.reserve(jmax);
  for (std::uint64_t j = 1; j <= jmax; ++j) {
    TraceEntry e;
    e.index = j;
    e.value = Rational(std::binary_search(hits.begin(), hits.end(), j) ? 1 : 0);
    v.trace.push_back(std::move(e));
  }
  for (std::uint64_t n = 0; (std::uint64_t{1} << (n + 1)) - 1 <= jmax; ++n) {
    std::uint64_t lo = std::uint64_t{1} << n;
    std::uint64_t hi = (std::uint64_t{1} << (n + 1)) - 1;
    OscillationBlock block;
    block.block = n;
    auto it = std::lower_bound(hits.begin(), hits.end(), lo);
    if (it == hits.end() || *it > hi) {
      throw std::logic_error("oscillating_verdict: a complete block has no hit");
    }
    block.one_index = *it;
    for (std::uint64_t j = lo; j <= hi; ++j) {
      if (!std::binary_search(hits.begin(), hits.end(), j)) {
        block.zero_index = j;
        break;
      }
    }
    v.blocks.push_back(block);
  }
  return v;
}

ConvergenceVerdict profile_typewriter(const QuadraticIrrational& x, std::uint64_t jmax) {
  // In block n the point lies in exactly one closed dyadic cell (it is
  // irrational, so never on a cell boundary): binary-search its index.
  std::vector<std::uint64_t> hits;
  for (std::uint64_t n = 0; (std::uint64_t{1} << n) <= jmax; ++n) {
    std::uint64_t cells = std::uint64_t{1} << n;
    std::uint64_t lo = 0, hi = cells - 1;
    while (lo < hi) {
      std::uint64_t mid = lo + (hi - lo + 1) / 2;
      Rational left(static_cast<long long>(mid), static_cast<long long>(cells));
      if (x.compare(left) > 0) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    std::uint64_t j = cells + lo;
    if (j <= jmax) hits.push_back(j);
  }
  return oscillating_verdict(hits, jmax);
}

ConvergenceVerdict profile_kurtz(const Rational& x, std::uint64_t jmax) {
  if (x.is_zero()) {
    ConvergenceVerdict v = stabilized_verdict(
        1, EvalResult(Rational(0)), "every term vanishes at 0");
    fill_threshold_trace(v, jmax, 1, Rational(0), EvalResult(Rational(0)));
    return v;
  }
  BigInt f = x.reciprocal().floor();
  if (f >= BigInt(kMaxIndex)) {
    throw std::invalid_argument("pointwise_profile: point too close to 0 to index");
  }
  std::uint64_t at = f.convert_to<std::uint64_t>() + 1;  // least j with 1/j < x
  Enclosure limit = sqrt_enclosure(x.reciprocal(), kSqrtBits);
  ConvergenceVerdict v = stabilized_verdict(
      at, EvalResult(limit),
      "the point leaves the truncation interval at this index and the value is x^-1/2 "
      "from then on");
  fill_threshold_trace(v, jmax, at, Rational(0), EvalResult(limit));
  return v;
}

ConvergenceVerdict profile_kurtz(const QuadraticIrrational& x, std::uint64_t jmax) {
  std::optional<std::uint64_t> at;
  for (std::uint64_t j = 1; j <= jmax && !at; ++j) {
    if (x.compare(unit_fraction(j)) > 0) at = j;
  }
  ConvergenceVerdict v;
  v.mode = ConvergenceMode::PointwiseStabilized;
  if (!at) {
    v.certified = false;
    v.note = "the point is below 1/j for every traced index; stabilization lies past the horizon";
    fill_threshold_trace(v, jmax, jmax + 1, Rational(0), EvalResult(Rational(0)));
    return v;
  }
  EvalResult limit = eval(sequence_term(SequenceKind::kurtz(), *at), x);
  v = stabilized_verdict(*at, limit,
                         "the point leaves the truncation interval at this index");
  fill_threshold_trace(v, jmax, *at, Rational(0), limit);
  return v;
}

const StepFunction& require_step(const PiecewiseFn& f) {
  const StepFunction* s = std::get_if<StepFunction>(&f);
  if (s == nullptr) {
    throw std::invalid_argument("dominated_check: symbolic tail terms are not step data");
  }
  return *s;
}

}  // namespace

EvalResult pairwise_l1_distance(const SequenceKind& kind, std::uint64_t j, std::uint64_t m) {
  check_index_range(j, m);
  switch (kind.family) {
    case SequenceFamily::RationalPoints:
      // Terms differ only on a finite point set, which the seminorm ignores.
      return EvalResult(Rational(0));
    case SequenceFamily::FatCover: {
      check_horizon(m, 2);
      IntervalSet grown = fat_union(*kind.cover, m);
      IntervalSet base = fat_union(*kind.cover, j);
      // The covers are nested, so |G_m - G_j| is the indicator of the growth.
      return EvalResult(IntervalSet::difference(grown, base).measure());
    }
    case SequenceFamily::Typewriter: {
      check_horizon(m, 2);
      IntervalSet sj = IntervalSet::of(typewriter_support(j));
      IntervalSet sm = IntervalSet::of(typewriter_support(m));
      Rational sym = IntervalSet::difference(sj, sm).measure() +
                     IntervalSet::difference(sm, sj).measure();
      return EvalResult(sym);
    }
    case SequenceFamily::Kurtz:
      return EvalResult(tail_pairwise(j, m));
  }
  throw std::logic_error("pairwise_l1_distance: unknown family");
}

CauchyModulus cauchy_modulus(const SequenceKind& kind, const Rational& eps) {
  if (!eps.is_positive()) {
    throw std::invalid_argument("cauchy_modulus: eps must be positive");
  }
  CauchyModulus out;
  switch (kind.family) {
    case SequenceFamily::RationalPoints:
      out.N = 1;
      out.bound_at_N = EvalResult(Rational(0));
      out.certificate = "pairwise==0";
      out.note = "all terms lie in the same seminorm-zero class";
      return out;
    case SequenceFamily::FatCover: {
      // Least N with ell * 2^-N <= eps; the tail of the cover past N has
      // total length at most that, and every pairwise distance is a strict
      // sub-sum of the tail.
      std::uint64_t n = 1;
      while (kind.ell() * Rational::pow2(-static_cast<long>(n)) > eps) {
        if (++n > kMaxHorizon) {
          throw std::invalid_argument("cauchy_modulus: eps too small to index");
        }
      }
      out.N = n;
      out.bound_at_N = EvalResult(kind.ell() * Rational::pow2(-static_cast<long>(n)));
      out.certificate = "tail<=ell*2^-k";
      out.note = "pairwise distances beyond N are strictly below the tail bound";
      return out;
    }
    case SequenceFamily::Typewriter:
      throw std::invalid_argument(
          "cauchy_modulus: unsupported for the sliding-block family; its distance to the "
          "zero class is reported by l1_limit_defect");
    case SequenceFamily::Kurtz: {
      // Pairwise distance from k is strictly below 2/sqrt(k); invert 2/sqrt(N) <= eps.
      Rational threshold = Rational(4) * (eps * eps).reciprocal();
      BigInt n = threshold.ceil();
      if (n < 1) n = 1;
      if (n >= BigInt(kMaxIndex)) {
        throw std::invalid_argument("cauchy_modulus: eps too small to index");
      }
      out.N = n.convert_to<std::uint64_t>();
      out.bound_at_N = EvalResult(sqrt_enclosure(unit_fraction(out.N), kSqrtBits).scale(Rational(2)));
      out.certificate = "2/sqrt(k)<=eps";
      out.note = "pairwise distances 2*(k^-1/2 - m^-1/2) stay strictly below 2/sqrt(N) "
                 "for m > k >= N";
      return out;
    }
  }
  throw std::logic_error("cauchy_modulus: unknown family");
}

Enclosure l1_limit_defect(const SequenceKind& kind, std::uint64_t k, std::uint64_t probe_m) {
  if (k < 1 || probe_m <= k) {
    throw std::invalid_argument("l1_limit_defect: indices must satisfy probe_m > k >= 1");
  }
  switch (kind.family) {
    case SequenceFamily::RationalPoints:
      return Enclosure::point(Rational(0));
    case SequenceFamily::FatCover: {
      check_horizon(probe_m, 2);
      IntervalSet deep = fat_union(*kind.cover, probe_m);
      IntervalSet base = fat_union(*kind.cover, k);
      Rational seen = IntervalSet::difference(deep, base).measure();
      // The unseen remainder of the limit cover has length at most the tail bound.
      return Enclosure(seen, seen + fat_tail_bound(*kind.cover, probe_m));
    }
    case SequenceFamily::Typewriter:
      return Enclosure::point(Rational::pow2(-static_cast<long>(floor_log2(k))));
    case SequenceFamily::Kurtz:
      if (k > kMaxIndex) throw std::invalid_argument("l1_limit_defect: index too large");
      // Integral of x^-1/2 over the missing head (0, 1/k].
      return sqrt_enclosure(unit_fraction(k), kSqrtBits).scale(Rational(2));
  }
  throw std::logic_error("l1_limit_defect: unknown family");
}

std::string to_string(ConvergenceMode mode) {
  switch (mode) {
    case ConvergenceMode::PointwiseStabilized: return "pointwise-stabilized";
    case ConvergenceMode::Oscillating: return "oscillating";
    case ConvergenceMode::InMeasureToZero: return "in-measure-to-zero";
    case ConvergenceMode::CauchyL1: return "cauchy-l1";
    case ConvergenceMode::L1Converged: return "l1-converged";
  }
  return "unknown";
}

ConvergenceVerdict pointwise_profile(const SequenceKind& kind, const Rational& x,
                                     std::uint64_t jmax) {
  if (x.is_negative() || x > Rational(1)) {
    throw std::invalid_argument("pointwise_profile: point outside [0,1]");
  }
  check_horizon(jmax, 4);
  switch (kind.family) {
    case SequenceFamily::RationalPoints: {
      std::uint64_t at = rational_rank(x);
      ConvergenceVerdict v = stabilized_verdict(
          at, EvalResult(Rational(1)),
          "the point enters the enumeration at its rank and the value is 1 from then on");
      fill_threshold_trace(v, jmax, at, Rational(0), EvalResult(Rational(1)));
      return v;
    }
    case SequenceFamily::FatCover:
      return profile_fat_cover(*kind.cover, x, jmax);
    case SequenceFamily::Typewriter:
      return oscillating_verdict(typewriter_hits(x, jmax), jmax);
    case SequenceFamily::Kurtz:
      return profile_kurtz(x, jmax);
  }
  throw std::logic_error("pointwise_profile: unknown family");
}

ConvergenceVerdict pointwise_profile(const SequenceKind& kind, const QuadraticIrrational& x,
                                     std::uint64_t jmax) {
  if (x.compare(Rational(0)) < 0 || x.compare(Rational(1)) > 0) {
    throw std::invalid_argument("pointwise_profile: point outside [0,1]");
  }
  check_horizon(jmax, 4);
  switch (kind.family) {
    case SequenceFamily::RationalPoints: {
      ConvergenceVerdict v = stabilized_verdict(
          1, EvalResult(Rational(0)), "an irrational point never enters the enumeration");
      fill_threshold_trace(v, jmax, 1, Rational(0), EvalResult(Rational(0)));
      return v;
    }
    case SequenceFamily::FatCover:
      return profile_fat_cover(*kind.cover, x, jmax);
    case SequenceFamily::Typewriter:
      return profile_typewriter(x, jmax);
    case SequenceFamily::Kurtz:
      return profile_kurtz(x, jmax);
  }
  throw std::logic_error("pointwise_profile: unknown family");
}

std::vector<std::pair<std::uint64_t, Rational>> in_measure_profile(const SequenceKind& kind,
                                                                   const Rational& eps,
                                                                   std::uint64_t jmax) {
  if (!eps.is_positive() || eps > Rational(1)) {
    throw std::invalid_argument("in_measure_profile: need 0 < eps <= 1");
  }
  check_horizon(jmax, 1);
  std::vector<std::pair<std::uint64_t, Rational>> out;
  out.reserve(jmax);
  switch (kind.family) {
    case SequenceFamily::RationalPoints:
      for (std::uint64_t j = 1; j <= jmax; ++j) out.emplace_back(j, Rational(0));
      return out;
    case SequenceFamily::FatCover: {
      // eps <= 1, so the superlevel set is the whole cover at stage j.
      IntervalSet acc;
      for (std::uint64_t j = 1; j <= jmax; ++j) {
        acc = IntervalSet::unite(acc, IntervalSet::of(fat_interval(*kind.cover, j)));
        out.emplace_back(j, acc.measure());
      }
      return out;
    }
    case SequenceFamily::Typewriter:
      for (std::uint64_t j = 1; j <= jmax; ++j) {
        out.emplace_back(j, Rational::pow2(-static_cast<long>(floor_log2(j))));
      }
      return out;
    case SequenceFamily::Kurtz: {
      // {x^-1/2 >= eps} intersected with (1/j, 1].
      Rational cut = std::min(Rational(1), (eps * eps).reciprocal());
      for (std::uint64_t j = 1; j <= jmax; ++j) {
        Rational len = cut - unit_fraction(j);
        out.emplace_back(j, len.is_positive() ? len : Rational(0));
      }
      return out;
    }
  }
  throw std::logic_error("in_measure_profile: unknown family");
}

DominationReport dominated_check(const std::vector<PiecewiseFn>& terms, const StepFunction& g,
                                 DominationMode mode) {
  for (const StepPiece& p : g.pieces()) {
    if (p.value.is_negative()) {
      throw std::invalid_argument("dominated_check: bound must be nonnegative");
    }
  }
  for (const PointValue& e : g.exceptions()) {
    if (e.value.is_negative()) {
      throw std::invalid_argument("dominated_check: bound must be nonnegative");
    }
  }
  DominationReport rep;
  rep.mode = mode;
  rep.dominated = true;
  std::vector<Rational> bound_points = g.breakpoints();
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const StepFunction& f = require_step(terms[t]);
    std::vector<Rational> grid = f.breakpoints();
    grid.insert(grid.end(), bound_points.begin(), bound_points.end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      // Both functions are constant strictly between consecutive grid points,
      // so the midpoint decides the whole open cell.
      Rational mid = (grid[i] + grid[i + 1]) / Rational(2);
      Rational fv = f.eval(mid);
      Rational gv = g.eval(mid);
      if (fv.abs() > gv) {
        rep.dominated = false;
        rep.violating_term = t;
        rep.violation_cell = Interval::open(grid[i], grid[i + 1]);
        rep.term_value = fv;
        rep.bound_value = gv;
        return rep;
      }
    }
    if (mode == DominationMode::Everywhere) {
      for (const Rational& p : grid) {
        Rational fv = f.eval(p);
        Rational gv = g.eval(p);
        if (fv.abs() > gv) {
          rep.dominated = false;
          rep.violating_term = t;
          rep.violation_point = p;
          rep.term_value = fv;
          rep.bound_value = gv;
          return rep;
        }
      }
    }
  }
  return rep;
}

SequenceNotes sequence_notes(const SequenceKind& kind) {
  SequenceNotes n;
  switch (kind.family) {
    case SequenceFamily::RationalPoints:
      n.l1_limit = "zero class (each term vanishes outside a finite set)";
      n.detail = "the pointwise limit is the rationals indicator, whose Darboux gap is 1";
      return n;
    case SequenceFamily::FatCover:
      n.l1_limit = "indicator of the limit cover, of measure below ell";
      n.detail = "no function in its seminorm class is Riemann integrable: the gap stays at "
                 "least 1 - ell";
      return n;
    case SequenceFamily::Typewriter:
      n.l1_limit = "zero class (supports shrink to measure 0)";
      n.detail = "converges in measure and in seminorm, yet pointwise at no point: every "
                 "dyadic index block revisits value 1";
      return n;
    case SequenceFamily::Kurtz:
      n.l1_limit = "x^-1/2 on (0,1], extended by 0 at 0";
      n.limit_improperly_riemann_integrable = true;
      n.detail = "the contrast case: the unbounded limit is improperly Riemann integrable "
                 "with integral 2, so this Cauchy sequence does converge";
      return n;
  }
  throw std::logic_error("sequence_notes: unknown family");
}

}  // namespace dlab
