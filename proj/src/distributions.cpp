#include "cmw/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cmw/analysis/kernels.hpp"
#include "cmw/analysis/quadrature.hpp"

namespace cmw::distributions {

TestFunction::TestFunction(Evaluator eval, double lo, double hi, bool smooth, Evaluator derivative, double scale)
    : eval_(std::move(eval)), derivative_(std::move(derivative)), lo_(lo), hi_(hi), smooth_(smooth), scale_(scale) {
  if (!eval_) throw Error(ErrorKind::ParameterError, "test function needs an evaluator");
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorKind::ParameterError, "test function support must be a finite interval lo < hi");
  }
  if (!(scale_ > 0.0)) scale_ = 0.5 * (hi - lo);
}

TestFunction bump(double center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius) || !std::isfinite(center)) {
    throw Error(ErrorKind::ParameterError, "bump radius must be positive");
  }
  auto value = [center, radius](double x) {
    const double u = (x - center) / radius;
    const double w = 1.0 - u * u;
    return w > 0.0 ? std::exp(-1.0 / w) : 0.0;
  };
  auto slope = [center, radius](double x) {
    const double u = (x - center) / radius;
    const double w = 1.0 - u * u;
    if (!(w > 0.0)) return 0.0;
    return std::exp(-1.0 / w) * (-2.0 * u / (w * w)) / radius;
  };
  return TestFunction(value, center - radius, center + radius, true, slope, radius);
}

TestFunction linear_combination(double a, const TestFunction& phi, double b, const TestFunction& psi) {
  Evaluator eval = [a, b, phi, psi](double x) { return a * phi(x) + b * psi(x); };
  Evaluator slope;
  if (phi.has_derivative() && psi.has_derivative()) {
    slope = [a, b, phi, psi](double x) { return a * phi.derivative(x) + b * psi.derivative(x); };
  }
  return TestFunction(eval, std::min(phi.lo(), psi.lo()), std::max(phi.hi(), psi.hi()), phi.smooth() && psi.smooth(),
                      slope, std::min(phi.scale(), psi.scale()));
}

TestFunction multiply(const Evaluator& g, const TestFunction& phi) {
  return TestFunction([g, phi](double x) { return g(x) * phi(x); }, phi.lo(), phi.hi(), phi.smooth(), {}, phi.scale());
}

namespace {

double binomial(unsigned n, unsigned k) {
  double c = 1.0;
  for (unsigned j = 1; j <= k; ++j) c = c * static_cast<double>(n - k + j) / static_cast<double>(j);
  return c;
}

// Central k-th difference of g with step h, O(h^2) accurate.
double central_difference(const Evaluator& g, double x, unsigned k, double h) {
  double acc = 0.0;
  for (unsigned j = 0; j <= k; ++j) {
    const double offset = (0.5 * static_cast<double>(k) - static_cast<double>(j)) * h;
    acc += (j % 2 == 0 ? 1.0 : -1.0) * binomial(k, j) * g(x + offset);
  }
  return acc / std::pow(h, static_cast<double>(k));
}

}  // namespace

TestFunction derivative(const TestFunction& phi, unsigned k) {
  if (k == 0) return phi;
  Evaluator base = [phi](double x) { return phi(x); };
  unsigned remaining = k;
  if (phi.has_derivative()) {
    base = [phi](double x) { return phi.derivative(x); };
    --remaining;
  }
  if (remaining == 0) return TestFunction(base, phi.lo(), phi.hi(), phi.smooth(), {}, phi.scale());
  // Step balancing truncation h^2 against rounding eps / h^k.
  const double h = remaining == 1 ? std::ldexp(phi.scale(), -20)
                                  : std::pow(std::ldexp(1.0, -52), 1.0 / (remaining + 2.0)) * phi.scale();
  Evaluator eval = [base, remaining, h](double x) { return central_difference(base, x, remaining, h); };
  return TestFunction(eval, phi.lo(), phi.hi(), phi.smooth(), {}, phi.scale());
}

double dirac_apply(const TestFunction& phi) { return phi(0.0); }

double pv_apply(const TestFunction& phi, std::size_t max_levels) {
  if (phi.lo() > 0.0 || phi.hi() < 0.0) {
    return analysis::integrate_checked([&phi](double x) { return phi(x) / x; }, phi.lo(), phi.hi()).value;
  }
  const double reach = std::max(-phi.lo(), phi.hi());
  const auto odd_part = [&phi](double x) { return (phi(x) - phi(-x)) / x; };
  int j = 0;
  while (std::ldexp(1.0, -j) >= reach) ++j;
  std::vector<double> levels;
  double previous = 0.0;
  bool have_previous = false;
  for (std::size_t step = 0; step < max_levels; ++step, ++j) {
    const double eps = std::ldexp(1.0, -j);
    levels.push_back(analysis::integrate_checked(odd_part, eps, reach).value);
    if (levels.size() < 2) continue;
    const double extrapolated = 2.0 * levels[levels.size() - 1] - levels[levels.size() - 2];
    if (have_previous && std::abs(extrapolated - previous) <= kPvTolerance) return extrapolated;
    previous = extrapolated;
    have_previous = true;
  }
  throw Error(ErrorKind::NoConvergence, "principal value levels did not stabilize");
}

double regular_apply(const Evaluator& f, const TestFunction& phi) {
  return analysis::integrate_checked([&](double x) { return f(x) * phi(x); }, phi.lo(), phi.hi()).value;
}

Functional dirac() {
  return [](const TestFunction& phi) { return dirac_apply(phi); };
}

Functional principal_value(std::size_t max_levels) {
  return [max_levels](const TestFunction& phi) { return pv_apply(phi, max_levels); };
}

Functional regular(Evaluator f) {
  return [f = std::move(f)](const TestFunction& phi) { return regular_apply(f, phi); };
}

double distr_derivative_apply(const Functional& t, unsigned order, const TestFunction& phi) {
  const double sign = order % 2 == 0 ? 1.0 : -1.0;
  return sign * t(derivative(phi, order));
}

std::vector<std::complex<double>> fourier_quadrature_1d(const analysis::SampledFunction& f, std::span<const double> y) {
  if (f.grid.dim() != 1) throw Error(ErrorKind::DimensionMismatch, "Fourier quadrature needs a 1-D grid");
  const std::size_t n = f.size();
  const double scale = f.grid.spacing() / std::sqrt(2.0 * std::numbers::pi);
  std::vector<std::complex<double>> out;
  out.reserve(y.size());
  for (const double w : y) {
    const auto term = [&](std::size_t k, bool imag) {
      const double weight = (k == 0 || k + 1 == n) ? 0.5 : 1.0;
      const double x = f.grid.coordinate(0, k);
      return weight * f.values[k] * (imag ? -std::sin(w * x) : std::cos(w * x));
    };
    const double re = analysis::kernels::blocked_sum(n, [&](std::size_t k) { return term(k, false); });
    const double im = analysis::kernels::blocked_sum(n, [&](std::size_t k) { return term(k, true); });
    out.emplace_back(re * scale, im * scale);
  }
  return out;
}

}  // namespace cmw::distributions
