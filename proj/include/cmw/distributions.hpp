#pragma once

// One-dimensional distributions at desk scale: test functions, functionals
// paired by evaluation or quadrature, and the dilation-translation algebra.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "cmw/analysis/grid.hpp"
#include "cmw/error.hpp"

namespace cmw::distributions {

using Evaluator = std::function<double(double)>;

// Compactly supported function. Calls outside [lo, hi] return 0 without
// touching the evaluator. `derivative` is an exact first derivative when
// known. `scale` sets the finite-difference step for derivative estimates.
class TestFunction {
 public:
  TestFunction(Evaluator eval, double lo, double hi, bool smooth = true, Evaluator derivative = {}, double scale = 0.0);

  double operator()(double x) const { return (x < lo_ || x > hi_) ? 0.0 : eval_(x); }
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  bool smooth() const noexcept { return smooth_; }
  double scale() const noexcept { return scale_; }
  bool has_derivative() const noexcept { return static_cast<bool>(derivative_); }
  double derivative(double x) const { return (x < lo_ || x > hi_) ? 0.0 : derivative_(x); }

 private:
  Evaluator eval_;
  Evaluator derivative_;
  double lo_;
  double hi_;
  bool smooth_;
  double scale_;
};

// x -> exp(-1 / (1 - u^2)), u = (x - center) / radius, for |u| < 1; 0 else.
// Ships with its exact derivative. Throws ParameterError for radius <= 0.
TestFunction bump(double center, double radius);

// a phi + b psi on the hull of both supports.
TestFunction linear_combination(double a, const TestFunction& phi, double b, const TestFunction& psi);

// g * phi for a smooth multiplier g; the derivative is not carried over.
TestFunction multiply(const Evaluator& g, const TestFunction& phi);

// k-th derivative of phi. k = 1 uses the exact derivative when present and a
// central difference with step 2^-20 * scale otherwise; higher orders apply
// a central k-th difference (to the exact derivative when present).
TestFunction derivative(const TestFunction& phi, unsigned k);

using Functional = std::function<double(const TestFunction&)>;

// delta(phi) = phi(0).
double dirac_apply(const TestFunction& phi);

inline constexpr double kPvTolerance = 1e-8;
inline constexpr std::size_t kPvMaxLevels = 30;

// lim_{eps -> 0+} of the integral of phi(x) / x over |x| >= eps. Uses the
// symmetric integrand (phi(x) - phi(-x)) / x on [eps, R] for eps = 2^-j and a
// Richardson step between levels; stops when two successive extrapolants
// agree within 1e-8. Throws NoConvergence after `max_levels` levels. When 0
// is outside the support the integral is taken directly.
double pv_apply(const TestFunction& phi, std::size_t max_levels = kPvMaxLevels);

// integral of f phi over phi's support by checked composite Simpson.
double regular_apply(const Evaluator& f, const TestFunction& phi);

Functional dirac();
Functional principal_value(std::size_t max_levels = kPvMaxLevels);
Functional regular(Evaluator f);

// (-1)^order T(phi^(order)).
double distr_derivative_apply(const Functional& t, unsigned order, const TestFunction& phi);

// tau_{a,b} sends f to f(a x - b). a must be non-zero.
template <class T>
struct DilationTranslation {
  T a;
  T b;

  DilationTranslation(T a_, T b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a == T(0)) throw Error(ErrorKind::ParameterError, "dilation factor must be non-zero");
  }
  friend bool operator==(const DilationTranslation&, const DilationTranslation&) = default;
};

// Parameters of tau_{outer} o tau_{inner} (inner applied first):
// (a, b) o (c, d) = (a c, c b + d).
template <class T>
DilationTranslation<T> tau_compose(const DilationTranslation<T>& outer, const DilationTranslation<T>& inner) {
  return DilationTranslation<T>(outer.a * inner.a, inner.a * outer.b + inner.b);
}

template <class T>
DilationTranslation<T> tau_identity() {
  return DilationTranslation<T>(T(1), T(0));
}

// (1/a, -b/a), the two-sided inverse under tau_compose.
template <class T>
DilationTranslation<T> tau_inverse(const DilationTranslation<T>& t) {
  return DilationTranslation<T>(T(1) / t.a, (T(0) - t.b) / t.a);
}

// x -> f(a x - b).
inline Evaluator tau_apply(const DilationTranslation<double>& t, Evaluator f) {
  return [t, f = std::move(f)](double x) { return f(t.a * x - t.b); };
}

// (2 pi)^(-1/2) times the trapezoid sum of e^{-i y x} f(x) over the samples.
// Throws DimensionMismatch unless the grid is 1-D.
std::vector<std::complex<double>> fourier_quadrature_1d(const analysis::SampledFunction& f, std::span<const double> y);

}  // namespace cmw::distributions
