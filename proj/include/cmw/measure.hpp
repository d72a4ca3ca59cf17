#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cmw/numbers/rational.hpp"

namespace cmw::measure {

using numbers::Rational;

// Half-open [lo, hi) with lo < hi.
struct Interval {
  Rational lo;
  Rational hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Finite union of half-open intervals, kept normalized: sorted, disjoint,
// with touching intervals merged. The ring of such sets is closed under
// union, intersection and difference.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  // Normalizes; empty intervals (lo >= hi) are dropped.
  explicit IntervalUnion(std::vector<Interval> pieces);
  static IntervalUnion interval(const Rational& lo, const Rational& hi) { return IntervalUnion({{lo, hi}}); }

  const std::vector<Interval>& intervals() const noexcept { return pieces_; }
  bool empty() const noexcept { return pieces_.empty(); }
  bool contains(const Rational& x) const;
  bool subset_of(const IntervalUnion& other) const;
  std::string to_string() const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<Interval> pieces_;
};

IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion difference(const IntervalUnion& a, const IntervalUnion& b);

// Sum of interval lengths.
Rational lebesgue_measure(const IntervalUnion& a);

// Counting measure value in the extended naturals.
struct Count {
  std::uint64_t value = 0;
  bool infinite = false;

  static Count infinity() { return {0, true}; }
  friend Count operator+(const Count& a, const Count& b) {
    if (a.infinite || b.infinite) return infinity();
    return {a.value + b.value, false};
  }
  friend bool operator==(const Count&, const Count&) = default;
};

template <class T>
Count counting_measure(const std::set<T>& a) {
  return {static_cast<std::uint64_t>(a.size()), false};
}

// Counting measure of a set given by an enumerator that returns successive
// distinct elements (nullopt when exhausted). More than `cap` elements is
// reported as Infinite: the set exceeds any bound we are willing to check.
Count counting_measure_enumerated(const std::function<std::optional<std::int64_t>()>& next, std::uint64_t cap);

struct SimpleTerm {
  Rational value;
  IntervalUnion support;

  friend bool operator==(const SimpleTerm&, const SimpleTerm&) = default;
};

// sum c_k chi_{A_k} in canonical form: values pairwise distinct and non-zero,
// supports non-empty and pairwise disjoint. Terms are sorted by decreasing
// value.
class SimpleFunction {
 public:
  SimpleFunction() = default;
  const std::vector<SimpleTerm>& terms() const noexcept { return terms_; }
  Rational operator()(const Rational& x) const;
  // Positive and negative parts, f = f+ - f-.
  SimpleFunction positive_part() const;
  SimpleFunction negative_part() const;

  friend SimpleFunction simple_canonicalize(const std::vector<SimpleTerm>& terms);
  friend bool operator==(const SimpleFunction&, const SimpleFunction&) = default;

 private:
  std::vector<SimpleTerm> terms_;
};

// Sums overlapping contributions pointwise, merges equal values and drops
// zero-valued pieces.
SimpleFunction simple_canonicalize(const std::vector<SimpleTerm>& terms);
SimpleFunction operator+(const SimpleFunction& s, const SimpleFunction& t);

// I_E(s) = sum c_k mu(A_k n E) for Lebesgue measure, computed as
// I_E(s+) - I_E(s-).
Rational integrate_simple(const SimpleFunction& s, const IntervalUnion& e);

struct MonotoneLimitReport {
  std::vector<Rational> measures;
  bool non_decreasing = false;
  // Every chain member is contained in the claimed limit.
  bool bounded_by_limit = false;
  // mu(limit) - mu(E_last).
  Rational final_gap;
  bool stabilized = false;
  bool holds = false;
};

// Finite-prefix check of mu(E) = lim mu(E_k) for an increasing chain.
// `holds` requires the measures to be non-decreasing, the chain to lie in the
// limit and the final gap to be at most `tolerance` (0 asks for exact
// stabilization). Throws NotIncreasing unless E_k is a subset of E_{k+1}.
MonotoneLimitReport monotone_limit_check(const std::vector<IntervalUnion>& chain, const IntervalUnion& limit,
                                         const Rational& tolerance = Rational(0));

}  // namespace cmw::measure
