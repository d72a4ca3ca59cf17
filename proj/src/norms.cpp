#include "cmw/analysis/norms.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <exception>

#include "cmw/analysis/kernels.hpp"
#include "cmw/error.hpp"

namespace cmw::analysis {

namespace {

void require_p(double p) {
  if (!(p >= 1.0)) throw Error(ErrorKind::ParameterError, "norm index p must satisfy 1 <= p <= infinity");
}

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

double power(double x, double p) {
  if (p == 1.0) return x;
  if (p == 2.0) return x * x;
  return std::pow(x, p);
}

double root(double x, double p) {
  if (p == 1.0) return x;
  if (p == 2.0) return std::sqrt(x);
  return std::pow(x, 1.0 / p);
}

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

// Enumerate the integer box |k_a| <= bound_a, calling visit for each point.
template <class Visit>
void for_each_in_box(const std::vector<std::int64_t>& bound, Visit&& visit) {
  Lattice h(bound.size());
  for (std::size_t a = 0; a < bound.size(); ++a) h[a] = -bound[a];
  while (true) {
    visit(h);
    std::size_t a = bound.size();
    while (a-- > 0) {
      if (h[a] < bound[a]) {
        ++h[a];
        break;
      }
      h[a] = -bound[a];
      if (a == 0) return;
    }
  }
}

// Whether Delta^m_h leaves at least one grid point.
bool difference_fits(const Grid& g, const Lattice& h, unsigned m) {
  for (std::size_t a = 0; a < g.dim(); ++a) {
    if (static_cast<std::uint64_t>(abs64(h[a])) * m >= g.shape()[a]) return false;
  }
  return true;
}

double squared_steps(const Lattice& h) {
  double s = 0;
  for (const auto k : h) s += static_cast<double>(k) * static_cast<double>(k);
  return s;
}

bool within_radius(const Lattice& h, double spacing, double t) {
  const double r = t / spacing;
  return squared_steps(h) <= r * r * (1.0 + 1e-12) + 1e-12;
}

// Runs task(i) for every i in parallel and rethrows the first error after
// the parallel region.
template <class Task>
std::vector<double> guarded_map(std::size_t n, Task&& task) {
  std::vector<std::exception_ptr> errors(n);
  auto out = kernels::parallel_map<double>(n, [&](std::size_t i) {
    try {
      return task(i);
    } catch (...) {
      errors[i] = std::current_exception();
      return 0.0;
    }
  });
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

template <class T>
double sup_norm(const SampledField<T>& f) {
  return kernels::parallel_max(f.size(), [&](std::size_t i) { return magnitude(f.values[i]); });
}

}  // namespace

template <class T>
double grid_lp_norm(const SampledField<T>& f, double p) {
  require_p(p);
  if (std::isinf(p)) return sup_norm(f);
  const double sum = kernels::blocked_sum(f.size(), [&](std::size_t i) { return power(magnitude(f.values[i]), p); });
  return root(sum * f.grid.cell_volume(), p);
}

double seq_lp_norm(std::span<const double> a, double p) {
  require_p(p);
  if (std::isinf(p)) {
    double best = 0.0;
    for (const double x : a) best = std::max(best, std::abs(x));
    return best;
  }
  double sum = 0.0;
  for (const double x : a) sum += power(std::abs(x), p);
  return root(sum, p);
}

std::vector<Lattice> lattice_ball(const Grid& grid, double t) {
  if (!(t >= 0.0)) throw Error(ErrorKind::ParameterError, "radius must be non-negative");
  std::vector<std::int64_t> bound(grid.dim());
  const double r = t / grid.spacing();
  for (std::size_t a = 0; a < grid.dim(); ++a) {
    const double cap = static_cast<double>(grid.shape()[a] - 1);
    bound[a] = static_cast<std::int64_t>(std::floor(std::min(cap, r * (1.0 + 1e-12) + 1e-12)));
  }
  std::vector<Lattice> out;
  for_each_in_box(bound, [&](const Lattice& h) {
    if (within_radius(h, grid.spacing(), t)) out.push_back(h);
  });
  return out;
}

template <class T>
std::vector<double> modulus_profile(const SampledField<T>& f, unsigned m, double p, std::span<const double> radii) {
  require_p(p);
  if (m == 0) throw Error(ErrorKind::ParameterError, "difference order must be at least 1");
  double tmax = 0.0;
  for (const double t : radii) {
    if (!(t >= 0.0)) throw Error(ErrorKind::ParameterError, "radius must be non-negative");
    tmax = std::max(tmax, t);
  }
  std::vector<Lattice> hs;
  for (auto& h : lattice_ball(f.grid, tmax)) {
    bool zero = std::all_of(h.begin(), h.end(), [](std::int64_t k) { return k == 0; });
    if (!zero && difference_fits(f.grid, h, m)) hs.push_back(std::move(h));
  }
  const auto norms = guarded_map(hs.size(), [&](std::size_t i) {
    return grid_lp_norm(finite_difference(f, hs[i], m), p);
  });
  std::vector<double> out;
  out.reserve(radii.size());
  for (const double t : radii) {
    double best = 0.0;  // h = 0
    for (std::size_t i = 0; i < hs.size(); ++i) {
      if (within_radius(hs[i], f.grid.spacing(), t)) best = std::max(best, norms[i]);
    }
    out.push_back(best);
  }
  return out;
}

template <class T>
double modulus_of_continuity(const SampledField<T>& f, unsigned m, double p, double t) {
  const double radii[] = {t};
  return modulus_profile(f, m, p, radii).front();
}

template <class T>
double cm_norm(const SampledField<T>& f, unsigned m) {
  double total = 0.0;
  for (unsigned k = 0; k <= m; ++k) {
    for (const auto& alpha : multi_indices(f.grid.dim(), k)) total += sup_norm(partial_derivative(f, alpha));
  }
  return total;
}

template <class T>
SmoothnessNorm holder_seminorm(const SampledField<T>& f, double s) {
  if (!(s > 0.0) || s == std::floor(s)) {
    throw Error(ErrorKind::ParameterError, "Hoelder order must be positive and non-integer");
  }
  const auto whole = static_cast<unsigned>(std::floor(s));
  const double frac = s - std::floor(s);
  SmoothnessNorm out;
  out.base = cm_norm(f, whole);

  const Grid& g = f.grid;
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = g.unflatten(i);

  for (const auto& alpha : multi_indices(g.dim(), whole)) {
    const auto d = partial_derivative(f, alpha);
    out.seminorm += kernels::parallel_max(
        n,
        [&](std::size_t i) {
          double best = 0.0;
          for (std::size_t j = i + 1; j < n; ++j) {
            double steps2 = 0.0;
            for (std::size_t a = 0; a < g.dim(); ++a) {
              const double diff = static_cast<double>(idx[i][a]) - static_cast<double>(idx[j][a]);
              steps2 += diff * diff;
            }
            const double dist = g.spacing() * std::sqrt(steps2);
            best = std::max(best, magnitude(d.values[i] - d.values[j]) / std::pow(dist, frac));
          }
          return best;
        },
        64);
  }
  return out;
}

template <class T>
SmoothnessNorm zygmund_seminorm(const SampledField<T>& f, unsigned m) {
  if (m == 0) throw Error(ErrorKind::ParameterError, "Zygmund order must be a positive integer");
  SmoothnessNorm out;
  out.base = cm_norm(f, m - 1);

  const Grid& g = f.grid;
  std::vector<std::int64_t> bound(g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a) bound[a] = static_cast<std::int64_t>((g.shape()[a] - 1) / 2);
  std::vector<Lattice> hs;
  for_each_in_box(bound, [&](const Lattice& h) {
    if (std::any_of(h.begin(), h.end(), [](std::int64_t k) { return k != 0; })) hs.push_back(h);
  });

  for (const auto& alpha : multi_indices(g.dim(), m - 1)) {
    const auto d = partial_derivative(f, alpha);
    const auto quotients = guarded_map(hs.size(), [&](std::size_t i) {
      std::int64_t hinf = 0;
      for (const auto k : hs[i]) hinf = std::max(hinf, abs64(k));
      return sup_norm(finite_difference(d, hs[i], 2)) / (g.spacing() * static_cast<double>(hinf));
    });
    double best = 0.0;
    for (const double v : quotients) best = std::max(best, v);
    out.seminorm += best;
  }
  return out;
}

template <class T>
double besov_norm_mc(const SampledField<T>& f, const BesovParams& params) {
  const auto& [s, p, q, m, levels] = params;
  if (!(s > 0.0)) throw Error(ErrorKind::ParameterError, "Besov smoothness s must be positive");
  if (!(static_cast<double>(m) > s)) throw Error(ErrorKind::ParameterError, "difference order m must exceed s");
  if (levels < 4) throw Error(ErrorKind::ParameterError, "at least 4 dyadic levels are required");
  require_p(p);
  if (!(q >= 1.0)) throw Error(ErrorKind::ParameterError, "q must satisfy 1 <= q <= infinity");

  std::vector<double> t(levels);
  for (std::size_t j = 0; j < levels; ++j) t[j] = std::ldexp(1.0, -static_cast<int>(j));
  const auto omega = modulus_profile(f, m, p, t);

  double level_part = 0.0;
  if (std::isinf(q)) {
    for (std::size_t j = 0; j < levels; ++j) level_part = std::max(level_part, std::pow(t[j], -s) * omega[j]);
  } else {
    double sum = 0.0;
    for (std::size_t j = 0; j < levels; ++j) {
      const double value = std::pow(t[j], -s - 1.0 / q) * omega[j];
      sum += std::pow(value, q) * (t[j] - 0.5 * t[j]);
    }
    level_part = std::pow(sum, 1.0 / q);
  }
  return grid_lp_norm(f, p) + level_part;
}

template <class T>
std::vector<std::pair<double, double>> uniform_continuity_profile(const SampledField<T>& f, std::size_t t_levels) {
  if (t_levels < 2) throw Error(ErrorKind::ParameterError, "at least 2 levels are required");
  std::vector<double> t(t_levels);
  for (std::size_t j = 0; j < t_levels; ++j) {
    t[j] = f.grid.spacing() * std::ldexp(1.0, static_cast<int>(t_levels - 1 - j));
  }
  const auto omega = modulus_profile(f, 1, kInfinity, t);
  std::vector<std::pair<double, double>> out;
  for (std::size_t j = 0; j < t_levels; ++j) out.emplace_back(t[j], omega[j]);
  return out;
}

bool uniformly_continuous_at_grid_scale(const std::vector<std::pair<double, double>>& profile, double threshold) {
  if (profile.empty()) return false;
  for (std::size_t j = 1; j < profile.size(); ++j) {
    if (profile[j].second > profile[j - 1].second) return false;
  }
  return profile.back().second < threshold;
}

#define CMW_INSTANTIATE_NORMS(T)                                                                           \
  template double grid_lp_norm(const SampledField<T>&, double);                                          \
  template double modulus_of_continuity(const SampledField<T>&, unsigned, double, double);               \
  template std::vector<double> modulus_profile(const SampledField<T>&, unsigned, double,                 \
                                               std::span<const double>);                                 \
  template double cm_norm(const SampledField<T>&, unsigned);                                             \
  template SmoothnessNorm holder_seminorm(const SampledField<T>&, double);                               \
  template SmoothnessNorm zygmund_seminorm(const SampledField<T>&, unsigned);                            \
  template double besov_norm_mc(const SampledField<T>&, const BesovParams&);                             \
  template std::vector<std::pair<double, double>> uniform_continuity_profile(const SampledField<T>&,      \
                                                                             std::size_t);

CMW_INSTANTIATE_NORMS(double)
CMW_INSTANTIATE_NORMS(std::complex<double>)

#undef CMW_INSTANTIATE_NORMS

}  // namespace cmw::analysis
