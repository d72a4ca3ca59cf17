#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "cmw/numbers/rational.hpp"

namespace cmw::numbers {

// A computable real: a rational sequence x_k together with a modulus
// eps -> N such that |x_j - x_k| <= eps whenever j, k >= N. Generators must
// be pure: the same index always yields the same rational.
class CauchyReal {
 public:
  using Term = std::function<Rational(std::size_t)>;
  using Modulus = std::function<std::size_t(const Rational&)>;

  // Wraps without checking; see real_from_sequence for the probed version.
  CauchyReal(Term term, Modulus modulus);

  static CauchyReal constant(const Rational& q);

  Rational term(std::size_t k) const { return (*term_)(k); }
  std::size_t modulus(const Rational& eps) const;

  // q = x_{N(eps)}, so |x - q| <= eps.
  Rational approx(const Rational& eps) const;

 private:
  std::shared_ptr<const Term> term_;
  std::shared_ptr<const Modulus> modulus_;
};

// Probe set used by real_from_sequence: eps in {1, 1/10, 1/100}, pairs
// (N, N + 7). A smoke test of the modulus contract, not a proof.
bool probe_modulus(const CauchyReal& x);

// Throws ModulusViolation if a probe fails.
CauchyReal real_from_sequence(CauchyReal::Term term, CauchyReal::Modulus modulus);

// x_k = 1/(k+1) with N(eps) = max(ceil(3/eps), 1).
CauchyReal harmonic_real();

CauchyReal operator+(const CauchyReal& x, const CauchyReal& y);
CauchyReal operator-(const CauchyReal& x);
CauchyReal operator-(const CauchyReal& x, const CauchyReal& y);
// Bounds Bx = |x_{Nx(1)}| + 1, By likewise;
// N(eps) = max(Nx(eps/(2 By)), Ny(eps/(2 Bx)), Nx(1), Ny(1)).
CauchyReal operator*(const CauchyReal& x, const CauchyReal& y);

// Reciprocal of a real known to satisfy |x| >= lower > 0. Throws
// ApartnessNotWitnessed when the approximation at lower/4 does not
// certify |x_k| >= lower/2 from some index on.
CauchyReal real_recip(const CauchyReal& x, const Rational& lower);

inline Rational real_approx(const CauchyReal& x, const Rational& eps) { return x.approx(eps); }

enum class RealOrdering { Less, Greater, Indistinguishable };

// Equality of reals is undecidable; the comparison is three-valued at a
// caller-chosen tolerance.
RealOrdering real_compare(const CauchyReal& x, const CauchyReal& y, const Rational& tol);

using RationalPredicate = std::function<bool(const Rational&)>;

// Trace of the bisection scheme: after n steps upper[n] is an upper bound,
// lower[n] is not, and upper[n] - lower[n] = (upper - lower) / 2^n.
struct Bisection {
  CauchyReal real;
  std::vector<Rational> upper;
  std::vector<Rational> lower;

  const Rational& last_upper() const { return upper.back(); }
};

// Least upper bound by bisection of [lower, upper]. The returned real is the
// sequence of upper bracket ends; `steps` controls the recorded trace.
// Throws BadBracket unless lower < upper, is_upper_bound(upper) and
// !is_upper_bound(lower).
Bisection supremum_bisect(RationalPredicate is_upper_bound, const Rational& lower,
                          const Rational& upper, std::size_t steps);

}  // namespace cmw::numbers
