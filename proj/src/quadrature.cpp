#include "cmw/analysis/quadrature.hpp"

#include <cmath>
#include <exception>
#include <vector>

#include "cmw/analysis/kernels.hpp"
#include "cmw/error.hpp"

namespace cmw::analysis {

namespace {

std::size_t even_panels(std::size_t panels) {
  if (panels < 2) return 2;
  return panels % 2 == 0 ? panels : panels + 1;
}

// g at a + k h for k = 0..panels; errors raised in `g` are rethrown after
// the parallel loop.
std::vector<double> samples(const std::function<double(double)>& g, double a, double b, std::size_t panels) {
  const double h = (b - a) / static_cast<double>(panels);
  std::vector<double> v(panels + 1);
  std::exception_ptr error;
  kernels::parallel_fill(v, [&](std::size_t k) {
    try {
      return g(k == panels ? b : a + h * static_cast<double>(k));
    } catch (...) {
#pragma omp critical(cmw_quadrature_error)
      if (!error) error = std::current_exception();
      return 0.0;
    }
  });
  if (error) std::rethrow_exception(error);
  for (const double x : v) {
    if (!std::isfinite(x)) throw Error(ErrorKind::ParameterError, "integrand is not finite on the interval");
  }
  return v;
}

double simpson_weights(const std::vector<double>& v, double h, bool absolute) {
  const std::size_t n = v.size() - 1;
  const double sum = kernels::blocked_sum(v.size(), [&](std::size_t k) {
    const double w = (k == 0 || k == n) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
    return w * (absolute ? std::abs(v[k]) : v[k]);
  });
  return sum * h / 3.0;
}

}  // namespace

double simpson(const std::function<double(double)>& g, double a, double b, std::size_t panels) {
  panels = even_panels(panels);
  const auto v = samples(g, a, b, panels);
  return simpson_weights(v, (b - a) / static_cast<double>(panels), false);
}

QuadratureResult integrate_checked(const std::function<double(double)>& g, double a, double b, std::size_t panels,
                                   double rel_tol) {
  panels = even_panels(panels);
  const auto fine = samples(g, a, b, 2 * panels);
  // The coarse rule reuses every other fine sample.
  std::vector<double> coarse(panels + 1);
  for (std::size_t k = 0; k <= panels; ++k) coarse[k] = fine[2 * k];
  const double h = (b - a) / static_cast<double>(2 * panels);
  QuadratureResult r;
  r.value = simpson_weights(fine, h, false);
  r.coarse = simpson_weights(coarse, 2 * h, false);
  r.abs_integral = std::abs(simpson_weights(fine, h, true));
  if (std::abs(r.value - r.coarse) > rel_tol * r.abs_integral) {
    throw Error(ErrorKind::NoConvergence, "Simpson refinement changed the integral beyond the relative tolerance");
  }
  return r;
}

}  // namespace cmw::analysis
