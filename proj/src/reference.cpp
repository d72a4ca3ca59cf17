#include "cmw/analysis/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cmw/error.hpp"

namespace cmw::analysis::reference {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

double binomial(unsigned m, unsigned k) {
  double c = 1.0;
  for (unsigned j = 1; j <= k; ++j) c = c * static_cast<double>(m - k + j) / static_cast<double>(j);
  return c;
}

std::vector<Lattice> box(const Grid& g, std::vector<std::int64_t> bound) {
  std::vector<Lattice> out;
  Lattice h(g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a) h[a] = -bound[a];
  while (true) {
    out.push_back(h);
    std::size_t a = g.dim();
    bool done = true;
    while (a-- > 0) {
      if (h[a] < bound[a]) {
        ++h[a];
        done = false;
        break;
      }
      h[a] = -bound[a];
    }
    if (done) return out;
  }
}

}  // namespace

double grid_lp_norm(const SampledFunction& f, double p) {
  if (!(p >= 1.0)) throw Error(ErrorKind::ParameterError, "norm index p must satisfy 1 <= p <= infinity");
  if (std::isinf(p)) {
    double best = 0.0;
    for (const double v : f.values) best = std::max(best, std::abs(v));
    return best;
  }
  double sum = 0.0;
  for (const double v : f.values) sum += std::pow(std::abs(v), p);
  return std::pow(sum * f.grid.cell_volume(), 1.0 / p);
}

SampledFunction finite_difference(const SampledFunction& f, const Lattice& h, unsigned m) {
  if (m == 0 || h.size() != f.grid.dim()) throw Error(ErrorKind::ParameterError, "bad difference order or shift");
  const Grid& g = f.grid;
  std::vector<double> origin(g.dim());
  std::vector<std::size_t> shape(g.dim()), start(g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a) {
    const auto span = static_cast<std::size_t>(abs64(h[a])) * m;
    if (span >= g.shape()[a]) throw Error(ErrorKind::ShiftOutOfRange, "difference shift leaves no valid grid points");
    shape[a] = g.shape()[a] - span;
    start[a] = h[a] < 0 ? span : 0;
    origin[a] = g.coordinate(a, start[a]);
  }
  Grid out_grid(origin, g.spacing(), shape);
  std::vector<double> v(out_grid.size(), 0.0);
  for (std::size_t r = 0; r < out_grid.size(); ++r) {
    const auto idx = out_grid.unflatten(r);
    double acc = 0.0;
    for (unsigned k = 0; k <= m; ++k) {
      std::vector<std::size_t> src(g.dim());
      for (std::size_t a = 0; a < g.dim(); ++a) {
        src[a] = static_cast<std::size_t>(static_cast<std::int64_t>(idx[a] + start[a]) + h[a] * static_cast<std::int64_t>(k));
      }
      const double sign = (m - k) % 2 == 0 ? 1.0 : -1.0;
      acc += sign * binomial(m, k) * f.values[g.flatten(src)];
    }
    v[r] = acc;
  }
  return SampledFunction(std::move(out_grid), std::move(v));
}

double modulus_of_continuity(const SampledFunction& f, unsigned m, double p, double t) {
  const Grid& g = f.grid;
  std::vector<std::int64_t> bound(g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a) bound[a] = static_cast<std::int64_t>(g.shape()[a] - 1);
  const double r = t / g.spacing();
  double best = 0.0;
  for (const auto& h : box(g, bound)) {
    double steps2 = 0.0;
    bool fits = true;
    bool zero = true;
    for (std::size_t a = 0; a < g.dim(); ++a) {
      steps2 += static_cast<double>(h[a]) * static_cast<double>(h[a]);
      if (static_cast<std::size_t>(abs64(h[a])) * m >= g.shape()[a]) fits = false;
      if (h[a] != 0) zero = false;
    }
    if (zero || !fits || steps2 > r * r * (1.0 + 1e-12) + 1e-12) continue;
    best = std::max(best, grid_lp_norm(finite_difference(f, h, m), p));
  }
  return best;
}

double holder_pair_sup(const SampledFunction& f, double beta) {
  const Grid& g = f.grid;
  double best = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto xi = g.point(i);
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      const auto xj = g.point(j);
      double d2 = 0.0;
      for (std::size_t a = 0; a < g.dim(); ++a) d2 += (xi[a] - xj[a]) * (xi[a] - xj[a]);
      best = std::max(best, std::abs(f.values[i] - f.values[j]) / std::pow(std::sqrt(d2), beta));
    }
  }
  return best;
}

double zygmund_sup(const SampledFunction& f) {
  const Grid& g = f.grid;
  std::vector<std::int64_t> bound(g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a) bound[a] = static_cast<std::int64_t>((g.shape()[a] - 1) / 2);
  double best = 0.0;
  for (const auto& h : box(g, bound)) {
    std::int64_t hinf = 0;
    for (const auto k : h) hinf = std::max(hinf, abs64(k));
    if (hinf == 0) continue;
    best = std::max(best, grid_lp_norm(finite_difference(f, h, 2), INFINITY) / (g.spacing() * static_cast<double>(hinf)));
  }
  return best;
}

double simpson(const std::function<double(double)>& g, double a, double b, std::size_t panels) {
  if (panels < 2) panels = 2;
  if (panels % 2 == 1) ++panels;
  const double h = (b - a) / static_cast<double>(panels);
  double sum = g(a) + g(b);
  for (std::size_t k = 1; k < panels; ++k) sum += (k % 2 == 1 ? 4.0 : 2.0) * g(a + h * static_cast<double>(k));
  return sum * h / 3.0;
}

std::vector<double> fourier_trapezoid(const SampledFunction& f, std::span<const double> y) {
  if (f.grid.dim() != 1) throw Error(ErrorKind::DimensionMismatch, "Fourier quadrature needs a 1-D grid");
  const double scale = f.grid.spacing() / std::sqrt(2.0 * std::numbers::pi);
  const std::size_t n = f.size();
  std::vector<double> out;
  for (const double w : y) {
    double re = 0.0, im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double weight = (k == 0 || k + 1 == n) ? 0.5 : 1.0;
      const double x = f.grid.coordinate(0, k);
      re += weight * f.values[k] * std::cos(w * x);
      im -= weight * f.values[k] * std::sin(w * x);
    }
    out.push_back(re * scale);
    out.push_back(im * scale);
  }
  return out;
}

}  // namespace cmw::analysis::reference
