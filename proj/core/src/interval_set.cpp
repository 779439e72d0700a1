#include "dlab/interval_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "dlab/quadratic.hpp"

namespace dlab {

std::vector<Interval> IntervalSet::normalize(std::vector<Interval> raw) {
  if (raw.empty()) return raw;
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.lo_closed != b.lo_closed) return a.lo_closed;  // closed endpoint first
    return a.hi < b.hi;
  });

  std::vector<Interval> out;
  Interval cur = raw.front();
  for (std::size_t i = 1; i < raw.size(); ++i) {
    const Interval& nxt = raw[i];
    bool joins = nxt.lo < cur.hi || (nxt.lo == cur.hi && (cur.hi_closed || nxt.lo_closed));
    if (joins) {
      if (nxt.lo == cur.lo) cur.lo_closed = cur.lo_closed || nxt.lo_closed;
      if (nxt.hi > cur.hi) {
        cur.hi = nxt.hi;
        cur.hi_closed = nxt.hi_closed;
      } else if (nxt.hi == cur.hi) {
        cur.hi_closed = cur.hi_closed || nxt.hi_closed;
      }
    } else {
      out.push_back(cur);
      cur = nxt;
    }
  }
  out.push_back(cur);
  return out;
}

Rational IntervalSet::measure() const {
  Rational m;
  for (const Interval& c : comps_) m += c.length();
  return m;
}

bool IntervalSet::contains(const Rational& x) const {
  for (const Interval& c : comps_) {
    if (x < c.lo) return false;
    if (c.contains(x)) return true;
  }
  return false;
}

bool IntervalSet::contains(const QuadraticIrrational& x) const {
  for (const Interval& c : comps_)
    if (c.contains(x)) return true;
  return false;
}

IntervalSet IntervalSet::complement() const {
  std::vector<Interval> out;
  Rational cursor(0);
  bool cursor_closed = true;
  for (const Interval& c : comps_) {
    if (auto gap = Interval::try_make(cursor, c.lo, cursor_closed, !c.lo_closed))
      out.push_back(*gap);
    cursor = c.hi;
    cursor_closed = !c.hi_closed;
  }
  if (auto gap = Interval::try_make(cursor, Rational(1), cursor_closed, true))
    out.push_back(*gap);
  IntervalSet r;
  r.comps_ = std::move(out);  // gaps of a normalized set are already normalized
  return r;
}

IntervalSet IntervalSet::unite(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> raw = a.comps_;
  raw.insert(raw.end(), b.comps_.begin(), b.comps_.end());
  return IntervalSet(std::move(raw));
}

IntervalSet IntervalSet::intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < a.comps_.size() && j < b.comps_.size()) {
    if (auto iv = Interval::intersect(a.comps_[i], b.comps_[j])) out.push_back(*iv);
    if (a.comps_[i].hi < b.comps_[j].hi)
      ++i;
    else if (b.comps_[j].hi < a.comps_[i].hi)
      ++j;
    else {
      ++i;
      ++j;
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::difference(const IntervalSet& a, const IntervalSet& b) {
  return intersect(a, b.complement());
}

IntervalSet set_op(const IntervalSet& a, const IntervalSet& b, SetOp op) {
  switch (op) {
    case SetOp::Union:
      return IntervalSet::unite(a, b);
    case SetOp::Intersect:
      return IntervalSet::intersect(a, b);
    case SetOp::Difference:
      return IntervalSet::difference(a, b);
  }
  throw std::logic_error("set_op: bad op");
}

std::string IntervalSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) s += ", ";
    s += comps_[i].to_string();
  }
  s += "}";
  return s;
}

}  // namespace dlab
