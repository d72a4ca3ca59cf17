#include "cmw/measure.hpp"

#include <algorithm>
#include <map>

#include "cmw/error.hpp"

namespace cmw::measure {

IntervalUnion::IntervalUnion(std::vector<Interval> pieces) {
  std::erase_if(pieces, [](const Interval& i) { return !(i.lo < i.hi); });
  std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (auto& p : pieces) {
    if (!pieces_.empty() && p.lo <= pieces_.back().hi) {
      if (p.hi > pieces_.back().hi) pieces_.back().hi = p.hi;
    } else {
      pieces_.push_back(std::move(p));
    }
  }
}

bool IntervalUnion::contains(const Rational& x) const {
  const auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                                   [](const Rational& v, const Interval& i) { return v < i.lo; });
  if (it == pieces_.begin()) return false;
  return x < std::prev(it)->hi;
}

bool IntervalUnion::subset_of(const IntervalUnion& other) const { return difference(*this, other).empty(); }

std::string IntervalUnion::to_string() const {
  if (pieces_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i > 0) out += " u ";
    out += "[" + pieces_[i].lo.to_string() + ", " + pieces_[i].hi.to_string() + ")";
  }
  return out;
}

namespace {

std::vector<Rational> breakpoints(const std::vector<const IntervalUnion*>& sets) {
  std::vector<Rational> pts;
  for (const auto* s : sets) {
    for (const auto& i : s->intervals()) {
      pts.push_back(i.lo);
      pts.push_back(i.hi);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Membership is constant on each elementary segment [p_i, p_{i+1}), so the
// left endpoint decides it.
template <class Keep>
IntervalUnion combine(const IntervalUnion& a, const IntervalUnion& b, Keep keep) {
  const auto pts = breakpoints({&a, &b});
  std::vector<Interval> out;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (keep(a.contains(pts[i]), b.contains(pts[i]))) out.push_back({pts[i], pts[i + 1]});
  }
  return IntervalUnion(std::move(out));
}

}  // namespace

IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

IntervalUnion difference(const IntervalUnion& a, const IntervalUnion& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

Rational lebesgue_measure(const IntervalUnion& a) {
  Rational total;
  for (const auto& i : a.intervals()) total += i.hi - i.lo;
  return total;
}

Count counting_measure_enumerated(const std::function<std::optional<std::int64_t>()>& next, std::uint64_t cap) {
  std::uint64_t n = 0;
  while (next()) {
    if (++n > cap) return Count::infinity();
  }
  return {n, false};
}

Rational SimpleFunction::operator()(const Rational& x) const {
  for (const auto& t : terms_) {
    if (t.support.contains(x)) return t.value;
  }
  return Rational(0);
}

SimpleFunction SimpleFunction::positive_part() const {
  SimpleFunction out;
  for (const auto& t : terms_) {
    if (t.value.sign() > 0) out.terms_.push_back(t);
  }
  return out;
}

SimpleFunction SimpleFunction::negative_part() const {
  SimpleFunction out;
  for (const auto& t : terms_) {
    if (t.value.sign() < 0) out.terms_.push_back({-t.value, t.support});
  }
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const SimpleTerm& a, const SimpleTerm& b) { return a.value > b.value; });
  return out;
}

SimpleFunction simple_canonicalize(const std::vector<SimpleTerm>& terms) {
  std::vector<const IntervalUnion*> sets;
  for (const auto& t : terms) sets.push_back(&t.support);
  const auto pts = breakpoints(sets);

  std::map<Rational, std::vector<Interval>, std::greater<>> by_value;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Rational v;
    for (const auto& t : terms) {
      if (t.support.contains(pts[i])) v += t.value;
    }
    if (!v.is_zero()) by_value[v].push_back({pts[i], pts[i + 1]});
  }
  SimpleFunction out;
  for (auto& [v, pieces] : by_value) out.terms_.push_back({v, IntervalUnion(std::move(pieces))});
  return out;
}

SimpleFunction operator+(const SimpleFunction& s, const SimpleFunction& t) {
  std::vector<SimpleTerm> all = s.terms();
  all.insert(all.end(), t.terms().begin(), t.terms().end());
  return simple_canonicalize(all);
}

namespace {

// sum c_k mu(A_k n E) for a non-negative canonical simple function.
Rational integrate_nonnegative(const SimpleFunction& s, const IntervalUnion& e) {
  Rational total;
  for (const auto& t : s.terms()) total += t.value * lebesgue_measure(intersect(t.support, e));
  return total;
}

}  // namespace

Rational integrate_simple(const SimpleFunction& s, const IntervalUnion& e) {
  return integrate_nonnegative(s.positive_part(), e) - integrate_nonnegative(s.negative_part(), e);
}

MonotoneLimitReport monotone_limit_check(const std::vector<IntervalUnion>& chain, const IntervalUnion& limit,
                                         const Rational& tolerance) {
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    if (!chain[k].subset_of(chain[k + 1])) {
      throw Error(ErrorKind::NotIncreasing, "chain member " + std::to_string(k) + " is not contained in the next");
    }
  }
  MonotoneLimitReport r;
  r.non_decreasing = true;
  r.bounded_by_limit = true;
  for (const auto& e : chain) {
    r.measures.push_back(lebesgue_measure(e));
    if (r.measures.size() > 1 && r.measures.back() < r.measures[r.measures.size() - 2]) r.non_decreasing = false;
    if (!e.subset_of(limit)) r.bounded_by_limit = false;
  }
  const Rational last = chain.empty() ? Rational(0) : r.measures.back();
  r.final_gap = lebesgue_measure(limit) - last;
  r.stabilized = !chain.empty() && chain.back() == limit;
  r.holds = r.non_decreasing && r.bounded_by_limit && r.final_gap.sign() >= 0 && r.final_gap <= tolerance;
  return r;
}

}  // namespace cmw::measure
