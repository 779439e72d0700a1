#include "dlab/piecewise.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "dlab/enclosure_math.hpp"
#include "dlab/quadratic.hpp"

namespace dlab {

namespace {

// Raw (pre-canonical) evaluation: exceptions override pieces, default 0.
Rational raw_eval(const std::vector<StepPiece>& pieces, const std::vector<PointValue>& excs,
                  const Rational& x) {
  for (const PointValue& pv : excs)
    if (pv.at == x) return pv.value;
  for (const StepPiece& p : pieces)
    if (p.where.contains(x)) return p.value;
  return Rational(0);
}

}  // namespace

StepFunction::StepFunction(std::vector<StepPiece> pieces, std::vector<PointValue> exceptions) {
  // Validate: pieces pairwise disjoint, exception points distinct.
  {
    std::vector<Interval> ivs;
    ivs.reserve(pieces.size());
    for (const StepPiece& p : pieces) ivs.push_back(p.where);
    std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
      if (a.lo != b.lo) return a.lo < b.lo;
      return !a.lo_closed && b.lo_closed;
    });
    for (std::size_t i = 1; i < ivs.size(); ++i) {
      const Interval& a = ivs[i - 1];
      const Interval& b = ivs[i];
      bool overlap = b.lo < a.hi || (b.lo == a.hi && a.hi_closed && b.lo_closed);
      if (overlap) throw std::invalid_argument("StepFunction: overlapping pieces");
    }
    std::vector<Rational> pts;
    pts.reserve(exceptions.size());
    for (const PointValue& pv : exceptions) pts.push_back(pv.at);
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
      throw std::invalid_argument("StepFunction: duplicate exception points");
    for (const Rational& p : pts)
      if (p.is_negative() || p > Rational(1))
        throw std::invalid_argument("StepFunction: exception point outside [0,1]");
  }

  // Elementary grid: 0, 1, every piece endpoint, every exception point.
  std::vector<Rational> grid{Rational(0), Rational(1)};
  for (const StepPiece& p : pieces) {
    grid.push_back(p.where.lo);
    grid.push_back(p.where.hi);
  }
  for (const PointValue& pv : exceptions) grid.push_back(pv.at);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const std::size_t m = grid.size();
  std::vector<Rational> vals(m);
  for (std::size_t i = 0; i < m; ++i) vals[i] = raw_eval(pieces, exceptions, grid[i]);
  std::vector<Rational> cells(m - 1);
  for (std::size_t i = 0; i + 1 < m; ++i)
    cells[i] = raw_eval(pieces, exceptions, (grid[i] + grid[i + 1]) / Rational(2));

  // Canonical rebuild: maximal runs of equal-valued cells whose interior grid
  // points agree; matching boundary points are absorbed left-first. Leftover
  // nonzero point values become exceptions.
  std::vector<bool> consumed(m, false);
  std::size_t j = 0;
  while (j < cells.size()) {
    const Rational v = cells[j];
    std::size_t start = j;
    std::size_t e = j + 1;
    while (e < cells.size() && cells[e] == v && vals[e] == v) {
      consumed[e] = true;
      ++e;
    }
    bool lo_inc = !consumed[start] && vals[start] == v;
    if (lo_inc) consumed[start] = true;
    bool hi_inc = !consumed[e] && vals[e] == v;
    if (hi_inc) consumed[e] = true;
    if (!v.is_zero())
      pieces_.push_back(StepPiece{Interval::make(grid[start], grid[e], lo_inc, hi_inc), v});
    j = e;
  }
  for (std::size_t i = 0; i < m; ++i)
    if (!consumed[i] && !vals[i].is_zero()) exceptions_.push_back(PointValue{grid[i], vals[i]});
}

StepFunction StepFunction::indicator(const IntervalSet& s) {
  std::vector<StepPiece> pieces;
  pieces.reserve(s.components().size());
  for (const Interval& c : s.components()) pieces.push_back(StepPiece{c, Rational(1)});
  return StepFunction(std::move(pieces), {});
}

StepFunction StepFunction::constant(const Rational& c) {
  if (c.is_zero()) return StepFunction();
  return StepFunction({StepPiece{Interval::closed(Rational(0), Rational(1)), c}}, {});
}

Rational StepFunction::eval(const Rational& x) const {
  if (x.is_negative() || x > Rational(1))
    throw std::domain_error("StepFunction::eval: x outside [0,1]");
  return raw_eval(pieces_, exceptions_, x);
}

Rational StepFunction::eval(const QuadraticIrrational& x) const {
  for (const StepPiece& p : pieces_)
    if (p.where.contains(x)) return p.value;
  return Rational(0);
}

Rational StepFunction::seminorm_l1() const {
  Rational s;
  for (const StepPiece& p : pieces_) s += p.value.abs() * p.where.length();
  return s;
}

StepFunction StepFunction::linear_combine(const Rational& a, const StepFunction& f,
                                          const Rational& b, const StepFunction& g) {
  std::vector<Rational> grid = f.breakpoints();
  std::vector<Rational> gg = g.breakpoints();
  grid.insert(grid.end(), gg.begin(), gg.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<StepPiece> pieces;
  std::vector<PointValue> excs;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    Rational v = a * f.eval(grid[i]) + b * g.eval(grid[i]);
    if (!v.is_zero()) excs.push_back(PointValue{grid[i], v});
  }
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    Rational mid = (grid[i] + grid[i + 1]) / Rational(2);
    Rational v = a * f.eval(mid) + b * g.eval(mid);
    if (!v.is_zero())
      pieces.push_back(StepPiece{Interval::open(grid[i], grid[i + 1]), v});
  }
  return StepFunction(std::move(pieces), std::move(excs));
}

std::vector<Rational> StepFunction::breakpoints() const {
  std::vector<Rational> out{Rational(0), Rational(1)};
  for (const StepPiece& p : pieces_) {
    out.push_back(p.where.lo);
    out.push_back(p.where.hi);
  }
  for (const PointValue& pv : exceptions_) out.push_back(pv.at);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void check_kurtz(const KurtzTail& k) {
  if (k.j < 1) throw std::invalid_argument("KurtzTail: j must be >= 1");
}

EvalResult kurtz_eval(const KurtzTail& k, const Rational& x) {
  check_kurtz(k);
  if (x.is_negative() || x > Rational(1))
    throw std::domain_error("KurtzTail eval: x outside [0,1]");
  if (x <= Rational(1, k.j)) return Rational(0);  // boundary belongs to the zero piece
  return sqrt_enclosure(x.reciprocal(), 62);
}

EvalResult kurtz_eval(const KurtzTail& k, const QuadraticIrrational& x) {
  check_kurtz(k);
  if (x.compare(Rational(0)) < 0 || x.compare(Rational(1)) > 0)
    throw std::domain_error("KurtzTail eval: x outside [0,1]");
  if (x.compare(Rational(1, k.j)) < 0) return Rational(0);
  Enclosure bx = bracket(x, 100);
  // x > 1/j >= 2^-63 while the bracket width is 2^-100, so bx.lo stays positive.
  if (!bx.lo.is_positive()) throw std::logic_error("KurtzTail eval: degenerate bracket");
  Enclosure lo_part = sqrt_enclosure(bx.hi.reciprocal(), 70);
  Enclosure hi_part = sqrt_enclosure(bx.lo.reciprocal(), 70);
  return Enclosure(lo_part.lo, hi_part.hi);
}

}  // namespace

EvalResult eval(const PiecewiseFn& f, const Rational& x) {
  if (const auto* s = std::get_if<StepFunction>(&f)) return s->eval(x);
  return kurtz_eval(std::get<KurtzTail>(f), x);
}

EvalResult eval(const PiecewiseFn& f, const QuadraticIrrational& x) {
  if (const auto* s = std::get_if<StepFunction>(&f)) return s->eval(x);
  return kurtz_eval(std::get<KurtzTail>(f), x);
}

EvalResult seminorm_l1(const PiecewiseFn& f) {
  if (const auto* s = std::get_if<StepFunction>(&f)) return s->seminorm_l1();
  const KurtzTail& k = std::get<KurtzTail>(f);
  check_kurtz(k);
  // integral of x^(-1/2) over (1/j, 1] = 2 - 2*j^(-1/2)
  Enclosure root = sqrt_enclosure(Rational(1, k.j), 62);
  return (Enclosure::point(Rational(1)) - root).scale(Rational(2));
}

PiecewiseFn linear_combine(const Rational& a, const PiecewiseFn& f, const Rational& b,
                           const PiecewiseFn& g) {
  const auto* fs = std::get_if<StepFunction>(&f);
  const auto* gs = std::get_if<StepFunction>(&g);
  if (!fs || !gs)
    throw std::invalid_argument("linear_combine: both operands must be step functions");
  return StepFunction::linear_combine(a, *fs, b, *gs);
}

bool ae_equal(const PiecewiseFn& f, const PiecewiseFn& g) {
  const auto* fs = std::get_if<StepFunction>(&f);
  const auto* gs = std::get_if<StepFunction>(&g);
  if (fs && gs)
    return StepFunction::linear_combine(Rational(1), *fs, Rational(-1), *gs).pieces().empty();
  const auto* fk = std::get_if<KurtzTail>(&f);
  const auto* gk = std::get_if<KurtzTail>(&g);
  if (fk && gk) return fk->j == gk->j;
  return false;
}

}  // namespace dlab
