#include "dlab/darboux.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dlab/interval_set.hpp"
#include "dlab/witnesses.hpp"

namespace dlab {
namespace {

void check_depth(std::uint64_t K) {
  if (K == 0) throw std::invalid_argument("truncation depth must be >= 1");
}

// Feature points of f strictly inside (a, b): wherever f can change value.
std::vector<Rational> interior_features(const StepFunction& f, const Rational& a,
                                        const Rational& b) {
  std::vector<Rational> out;
  for (const Rational& s : f.breakpoints())
    if (a < s && s < b) out.push_back(s);
  return out;
}

struct EditSlice {
  std::optional<Rational> min_value;  // least edited value strictly inside the cell
  std::optional<Rational> max_value;
  std::optional<Rational> min_point;
  std::optional<Rational> max_point;
};

EditSlice edits_inside(const std::vector<PointEdit>& edits, const Rational& a, const Rational& b) {
  EditSlice s;
  for (const PointEdit& e : edits) {
    if (!(a < e.at && e.at < b)) continue;
    if (!s.min_value || e.value < *s.min_value) {
      s.min_value = e.value;
      s.min_point = e.at;
    }
    if (!s.max_value || e.value > *s.max_value) {
      s.max_value = e.value;
      s.max_point = e.at;
    }
  }
  return s;
}

DarbouxReport step_sums(const StepFunction& f, const Partition& P) {
  DarbouxReport rep;
  Rational upper, lower;
  for (std::size_t i = 0; i < P.cells(); ++i) {
    auto [a, b] = P.cell(i);
    Rational len = b - a;
    CellRange r = exact_range_on_open_cell(f, a, b);
    upper += r.sup * len;
    lower += r.inf * len;
    rep.witnesses.push_back(CellWitness{i, a, b, WitnessRole::Sup, CertMethod::ExactRange, r.sup_point,
                                        std::nullopt, std::nullopt, std::nullopt, std::nullopt, r.sup});
    rep.witnesses.push_back(CellWitness{i, a, b, WitnessRole::Inf, CertMethod::ExactRange, r.inf_point,
                                        std::nullopt, std::nullopt, std::nullopt, std::nullopt, r.inf});
  }
  rep.upper_sum = upper;
  rep.lower_sum = lower;
  return rep;
}

DarbouxReport rationals_sums(const Partition& P) {
  DarbouxReport rep;
  for (std::size_t i = 0; i < P.cells(); ++i) {
    auto [a, b] = P.cell(i);
    auto [w, rank] = first_allowed_rational_in(a, b, {});
    rep.witnesses.push_back(CellWitness{i, a, b, WitnessRole::Sup, CertMethod::RationalPoint, w,
                                        std::nullopt, rank, std::nullopt, std::nullopt, Rational(1)});
    QuadraticIrrational z = irrational_in(Interval::open(a, b));
    rep.witnesses.push_back(CellWitness{i, a, b, WitnessRole::Inf, CertMethod::IrrationalPoint,
                                        std::nullopt, z, std::nullopt, std::nullopt, std::nullopt,
                                        Rational(0)});
  }
  rep.upper_sum = Rational(1);
  rep.lower_sum = Rational(0);
  return rep;
}

// Shared by darboux_sums (no edits) and robustness_probe (finite edits).
DarbouxReport cover_sums(const FatCoverDescriptor& d, const Partition& P, std::uint64_t K,
                         const std::vector<PointEdit>& edits) {
  IntervalSet cover = fat_union(d.cfg, K);
  Rational tail = fat_tail_bound(d.cfg, K);
  std::vector<Rational> edit_points;
  edit_points.reserve(edits.size());
  for (const PointEdit& e : edits) edit_points.push_back(e.at);

  DarbouxReport rep;
  rep.truncation_depth = K;
  Rational upper;
  Rational lower_lo;        // certified lower bound on the lower sum
  Rational lower_exact;     // exact lower sum, valid only when no cell is unresolved
  bool all_resolved = true;

  for (std::size_t i = 0; i < P.cells(); ++i) {
    auto [a, b] = P.cell(i);
    Rational len = b - a;
    EditSlice es = edits_inside(edits, a, b);

    // Sup side: rationals are dense and all lie in the cover, so the sup over
    // the cell minus the edited points is exactly 1; an edit above 1 moves the
    // sup to that edited point.
    if (es.max_value && *es.max_value > Rational(1)) {
      upper += *es.max_value * len;
      rep.witnesses.push_back(CellWitness{i, a, b, WitnessRole::Sup, CertMethod::RationalPoint,
                                          *es.max_point, std::nullopt, std::nullopt, std::nullopt,
                                          std::nullopt, *es.max_value});
    } else {
      auto [w, rank] = first_allowed_rational_in(a, b, edit_points);
      upper += len;
      rep.witnesses.push_back(CellWitness{i, a, b, WitnessRole::Sup, CertMethod::RationalPoint, w,
                                          std::nullopt, rank, std::nullopt, std::nullopt,
                                          Rational(1)});
    }

    // Inf side: three-way verdict against the truncated cover.
    const Interval* inside = nullptr;
    for (const Interval& c : cover.components()) {
      if (c.lo > a) break;
      if (c.contains_open(a, b)) {
        inside = &c;
        break;
      }
    }
    if (inside) {
      Rational inf_val(1);
      std::optional<Rational> attained_at;
      if (es.min_value && *es.min_value < inf_val) {
        inf_val = *es.min_value;
        attained_at = es.min_point;
      }
      lower_exact += inf_val * len;
      lower_lo += inf_val * len;
      rep.witnesses.push_back(CellWitness{i, a, b, WitnessRole::Inf,
                                          attained_at ? CertMethod::RationalPoint
                                                      : CertMethod::InsideCover,
                                          attained_at, std::nullopt, std::nullopt, std::nullopt,
                                          *inside, inf_val});
      continue;
    }
    Rational excess =
        IntervalSet::difference(IntervalSet::of(Interval::open(a, b)), cover).measure();
    if (excess > tail) {
      // More of the cell is missing than every later cover stage could supply,
      // so some point of the cell stays outside the full cover: inf = 0.
      Rational inf_val(0);
      std::optional<Rational> attained_at;
      if (es.min_value && *es.min_value < inf_val) {
        inf_val = *es.min_value;
        attained_at = es.min_point;
      }
      lower_exact += inf_val * len;
      lower_lo += inf_val * len;
      rep.witnesses.push_back(CellWitness{i, a, b, WitnessRole::Inf, CertMethod::EscapesCover,
                                          attained_at, std::nullopt, std::nullopt, excess,
                                          std::nullopt, inf_val});
      continue;
    }
    all_resolved = false;
    Rational cell_lo = Rational(0);
    if (es.min_value && *es.min_value < cell_lo) cell_lo = *es.min_value;
    lower_lo += cell_lo * len;
    rep.witnesses.push_back(CellWitness{i, a, b, WitnessRole::Inf, CertMethod::Unresolved,
                                        std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                                        std::nullopt, std::nullopt});
  }

  rep.upper_sum = upper;
  if (all_resolved) {
    rep.lower_sum = lower_exact;
  } else {
    // The lower sum of the limit indicator is trapped between the resolved
    // part and the measure of the full cover (<= cover measure + tail).
    Rational cap = min(upper, cover.measure() + tail);
    rep.lower_sum = Enclosure(lower_lo, max(lower_lo, cap));
  }
  return rep;
}

Rational step_gap_at_uniform_depth(const StepFunction& f, std::uint64_t K) {
  // Only depth-K dyadic cells with a feature point strictly inside can have
  // sup != inf; everything else contributes zero to U - L.
  Rational h = Rational::pow2(-static_cast<long>(K));
  std::set<BigInt> hot;
  for (const Rational& s : f.breakpoints()) {
    if (!s.is_positive() || s >= Rational(1)) continue;
    Rational scaled = s / h;
    if (scaled.den() == 1) continue;  // grid-aligned feature: no straddling cell
    hot.insert(scaled.floor());
  }
  Rational gap;
  for (const BigInt& i : hot) {
    Rational a = Rational(i) * h;
    Rational b = Rational(i + 1) * h;
    CellRange r = exact_range_on_open_cell(f, a, b);
    gap += (r.sup - r.inf) * h;
  }
  return gap;
}

}  // namespace

Rational sum_lower_bound(const SumValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return *r;
  return std::get<Enclosure>(v).lo;
}

Rational sum_upper_bound(const SumValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return *r;
  return std::get<Enclosure>(v).hi;
}

CellRange exact_range_on_open_cell(const StepFunction& f, const Rational& a, const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("cell must be nondegenerate");
  std::vector<Rational> grid = interior_features(f, a, b);
  grid.insert(grid.begin(), a);
  grid.push_back(b);

  std::optional<CellRange> r;
  auto consider = [&](const Rational& x, const Rational& v) {
    if (!r) {
      r = CellRange{v, v, x, x};
      return;
    }
    if (v > r->sup) {
      r->sup = v;
      r->sup_point = x;
    }
    if (v < r->inf) {
      r->inf = v;
      r->inf_point = x;
    }
  };
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    consider((grid[i] + grid[i + 1]) / Rational(2),
             f.eval((grid[i] + grid[i + 1]) / Rational(2)));
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) consider(grid[i], f.eval(grid[i]));
  return *r;
}

std::pair<Rational, std::uint64_t> first_allowed_rational_in(const Rational& a, const Rational& b,
                                                             const std::vector<Rational>& avoid) {
  if (!(a < b)) throw std::invalid_argument("cell must be nondegenerate");
  std::set<Rational> blocked(avoid.begin(), avoid.end());
  // Denominator-major, numerator-ascending scan of the reduced fractions in
  // (a, b) — exactly the order of the canonical enumeration restricted to the
  // cell, so the hit is the least-rank admissible rational.
  for (BigInt d = 1; d <= BigInt(10000000); ++d) {
    BigInt p_lo = floor_div(a.num() * d, a.den()) + 1;
    BigInt p_hi = ceil_div(b.num() * d, b.den()) - 1;
    for (BigInt p = p_lo; p <= p_hi; ++p) {
      if (boost::multiprecision::gcd(p, d) != 1) continue;
      Rational r(p, d);
      if (blocked.count(r)) continue;
      return {r, rational_rank(r)};
    }
  }
  throw std::logic_error("witness search failed on a nondegenerate cell");
}

DarbouxReport darboux_sums(const FunctionDescriptor& d, const Partition& P, std::uint64_t K) {
  check_depth(K);
  if (const auto* s = std::get_if<StepDescriptor>(&d)) return step_sums(s->fn, P);
  if (const auto* c = std::get_if<FatCoverDescriptor>(&d)) return cover_sums(*c, P, K, {});
  return rationals_sums(P);
}

Enclosure riemann_gap_certificate(const FunctionDescriptor& d, std::uint64_t K) {
  check_depth(K);
  if (const auto* s = std::get_if<StepDescriptor>(&d))
    return Enclosure(Rational(0), step_gap_at_uniform_depth(s->fn, K));
  if (const auto* c = std::get_if<FatCoverDescriptor>(&d)) {
    // Upper integral is 1 (rationals dense in every cell); the lower integral
    // sits between the truncated cover's measure and the full cover's, which
    // the tail budget pins down.
    Rational m = fat_union(c->cfg, K).measure();
    Rational tail = fat_tail_bound(c->cfg, K);
    return Enclosure(Rational(1) - m - tail, Rational(1) - m);
  }
  return Enclosure::point(Rational(1));
}

RobustnessReport robustness_probe(const FatCoverDescriptor& d, const std::vector<PointEdit>& edits,
                                  const Partition& P, std::uint64_t K) {
  check_depth(K);
  {
    std::set<Rational> seen;
    for (const PointEdit& e : edits) {
      if (e.at.is_negative() || e.at > Rational(1))
        throw std::invalid_argument("edit point outside [0,1]");
      if (!seen.insert(e.at).second)
        throw std::invalid_argument("duplicate edit point");
    }
  }
  RobustnessReport out{cover_sums(d, P, K, edits),
                       riemann_gap_certificate(FatCoverDescriptor{d.cfg}, K),
                       // Point edits change the function on a measure-zero set,
                       // which moves neither Darboux integral: every cell keeps
                       // sup >= 1 (unedited rationals remain dense) and the
                       // lower integral still equals the full cover's measure.
                       riemann_gap_certificate(FatCoverDescriptor{d.cfg}, K), true};
  std::set<Rational> edited;
  for (const PointEdit& e : edits) edited.insert(e.at);
  for (const CellWitness& w : out.report.witnesses) {
    if (w.role != WitnessRole::Sup) continue;
    if (!w.point || edited.count(*w.point)) {
      out.upper_witnesses_avoid_edits = false;
      break;
    }
  }
  return out;
}

}  // namespace dlab
