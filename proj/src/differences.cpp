#include "cmw/analysis/differences.hpp"

#include <cmath>
#include <complex>

#include "cmw/analysis/kernels.hpp"
#include "cmw/error.hpp"

namespace cmw::analysis {

unsigned MultiIndex::order() const {
  unsigned s = 0;
  for (const auto a : alpha) s += a;
  return s;
}

namespace {

void multi_indices_rec(std::size_t axis, unsigned left, std::vector<unsigned>& cur, std::vector<MultiIndex>& out) {
  if (axis + 1 == cur.size()) {
    cur[axis] = left;
    out.push_back({cur});
    return;
  }
  for (unsigned k = left + 1; k-- > 0;) {
    cur[axis] = k;
    multi_indices_rec(axis + 1, left - k, cur, out);
  }
}

// One forward difference along h.
template <class T>
SampledField<T> single_difference(const SampledField<T>& f, const Lattice& h) {
  const Grid& g = f.grid;
  std::vector<double> origin = g.origin();
  std::vector<std::size_t> shape = g.shape();
  std::vector<std::size_t> start(g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a) {
    const std::uint64_t mag = static_cast<std::uint64_t>(h[a] < 0 ? -h[a] : h[a]);
    if (mag >= shape[a]) throw Error(ErrorKind::ShiftOutOfRange, "difference shift leaves no valid grid points");
    shape[a] -= mag;
    start[a] = h[a] < 0 ? mag : 0;
    origin[a] = g.coordinate(a, start[a]);
  }
  Grid out_grid(std::move(origin), g.spacing(), std::move(shape));
  std::ptrdiff_t shift = 0;
  for (std::size_t a = 0; a < g.dim(); ++a) shift += static_cast<std::ptrdiff_t>(h[a]) * static_cast<std::ptrdiff_t>(g.strides()[a]);

  std::vector<T> v(out_grid.size());
  const auto& os = out_grid.strides();
  const auto& is = g.strides();
  kernels::parallel_fill(v, [&](std::size_t r) {
    std::size_t rem = r;
    std::size_t src = 0;
    for (std::size_t a = 0; a < os.size(); ++a) {
      const std::size_t i = rem / os[a];
      rem %= os[a];
      src += (i + start[a]) * is[a];
    }
    return f.values[static_cast<std::size_t>(static_cast<std::ptrdiff_t>(src) + shift)] - f.values[src];
  });
  return SampledField<T>(std::move(out_grid), std::move(v));
}

bool on_lattice(double x, double spacing, std::int64_t& steps) {
  const double r = x / spacing;
  const double k = std::round(r);
  if (std::abs(r - k) > 1e-9 * std::max(1.0, std::abs(r))) return false;
  steps = static_cast<std::int64_t>(k);
  return true;
}

// Derivative along one axis, first (order 1) or second (order 2).
template <class T>
SampledField<T> axis_derivative(const SampledField<T>& f, std::size_t axis, int order) {
  const Grid& g = f.grid;
  const std::size_t n = g.shape()[axis];
  const std::size_t need = order == 1 ? 3 : 4;
  if (n < need) throw Error(ErrorKind::GridTooCoarse, "grid axis too short for the derivative stencil");
  const std::size_t stride = g.strides()[axis];
  const double h = g.spacing();
  std::vector<T> v(g.size());
  kernels::parallel_fill(v, [&](std::size_t flat) -> T {
    const std::size_t i = (flat / stride) % n;
    auto at = [&](std::ptrdiff_t off) {
      return f.values[static_cast<std::size_t>(static_cast<std::ptrdiff_t>(flat) + off * static_cast<std::ptrdiff_t>(stride))];
    };
    if (order == 1) {
      if (i == 0) return (-3.0 * at(0) + 4.0 * at(1) - at(2)) / (2.0 * h);
      if (i == n - 1) return (3.0 * at(0) - 4.0 * at(-1) + at(-2)) / (2.0 * h);
      return (at(1) - at(-1)) / (2.0 * h);
    }
    if (i == 0) return (2.0 * at(0) - 5.0 * at(1) + 4.0 * at(2) - at(3)) / (h * h);
    if (i == n - 1) return (2.0 * at(0) - 5.0 * at(-1) + 4.0 * at(-2) - at(-3)) / (h * h);
    return (at(1) - 2.0 * at(0) + at(-1)) / (h * h);
  });
  return SampledField<T>(g, std::move(v));
}

}  // namespace

std::vector<MultiIndex> multi_indices(std::size_t n, unsigned order) {
  if (n == 0) throw Error(ErrorKind::ParameterError, "multi-index dimension must be positive");
  std::vector<MultiIndex> out;
  std::vector<unsigned> cur(n, 0);
  multi_indices_rec(0, order, cur, out);
  return out;
}

MultiIndex multi_index_of_path(std::size_t n, const std::vector<std::size_t>& path) {
  MultiIndex m{std::vector<unsigned>(n, 0)};
  for (const auto i : path) {
    if (i >= n) throw Error(ErrorKind::ParameterError, "index path entry outside the dimension");
    ++m.alpha[i];
  }
  return m;
}

template <class T>
SampledField<T> finite_difference(const SampledField<T>& f, const Lattice& h, unsigned m) {
  if (m == 0) throw Error(ErrorKind::ParameterError, "difference order must be at least 1");
  if (h.size() != f.grid.dim()) throw Error(ErrorKind::ParameterError, "displacement dimension mismatch");
  SampledField<T> cur = single_difference(f, h);
  for (unsigned k = 1; k < m; ++k) cur = single_difference(cur, h);
  return cur;
}

template <class T>
SampledField<T> resample_affine(const SampledField<T>& f, std::int64_t a, const Lattice& b_steps) {
  const Grid& g = f.grid;
  if (a == 0) throw Error(ErrorKind::ParameterError, "dilation factor must be non-zero");
  if (b_steps.size() != g.dim()) throw Error(ErrorKind::ParameterError, "translation dimension mismatch");
  std::vector<double> origin(g.dim());
  std::vector<std::size_t> shape(g.dim());
  std::vector<std::int64_t> first(g.dim());
  for (std::size_t ax = 0; ax < g.dim(); ++ax) {
    std::int64_t o = 0;
    if (!on_lattice(g.origin()[ax], g.spacing(), o)) {
      throw Error(ErrorKind::ParameterError, "grid origin is not on the spacing lattice");
    }
    // f covers lattice points o .. o + extent - 1; g's point j maps to a j - b.
    const std::int64_t lo = o;
    const std::int64_t hi = o + static_cast<std::int64_t>(g.shape()[ax]) - 1;
    const std::int64_t b = b_steps[ax];
    auto div_floor = [](std::int64_t p, std::int64_t q) {
      std::int64_t d = p / q;
      if ((p % q != 0) && ((p < 0) != (q < 0))) --d;
      return d;
    };
    auto div_ceil = [&](std::int64_t p, std::int64_t q) { return -div_floor(-p, q); };
    std::int64_t jlo = 0;
    std::int64_t jhi = 0;
    if (a > 0) {
      jlo = div_ceil(lo + b, a);
      jhi = div_floor(hi + b, a);
    } else {
      jlo = div_ceil(hi + b, a);
      jhi = div_floor(lo + b, a);
    }
    if (jhi < jlo) throw Error(ErrorKind::ShiftOutOfRange, "affine image leaves the sampled domain");
    first[ax] = jlo;
    shape[ax] = static_cast<std::size_t>(jhi - jlo + 1);
    origin[ax] = static_cast<double>(jlo) * g.spacing();
  }
  Grid out_grid(std::move(origin), g.spacing(), std::move(shape));
  std::vector<T> v(out_grid.size());
  for (std::size_t r = 0; r < out_grid.size(); ++r) {
    const auto idx = out_grid.unflatten(r);
    std::size_t src = 0;
    for (std::size_t ax = 0; ax < g.dim(); ++ax) {
      std::int64_t o = 0;
      on_lattice(g.origin()[ax], g.spacing(), o);
      const std::int64_t j = first[ax] + static_cast<std::int64_t>(idx[ax]);
      src += static_cast<std::size_t>(a * j - b_steps[ax] - o) * g.strides()[ax];
    }
    v[r] = f.values[src];
  }
  return SampledField<T>(std::move(out_grid), std::move(v));
}

template <class T>
SampledField<T> partial_derivative(const SampledField<T>& f, const MultiIndex& alpha) {
  if (alpha.alpha.size() != f.grid.dim()) throw Error(ErrorKind::ParameterError, "multi-index dimension mismatch");
  SampledField<T> cur = f;
  for (std::size_t axis = 0; axis < alpha.alpha.size(); ++axis) {
    unsigned k = alpha.alpha[axis];
    while (k >= 2) {
      cur = axis_derivative(cur, axis, 2);
      k -= 2;
    }
    if (k == 1) cur = axis_derivative(cur, axis, 1);
  }
  return cur;
}

template SampledField<double> finite_difference(const SampledField<double>&, const Lattice&, unsigned);
template SampledField<std::complex<double>> finite_difference(const SampledField<std::complex<double>>&,
                                                              const Lattice&, unsigned);
template SampledField<double> resample_affine(const SampledField<double>&, std::int64_t, const Lattice&);
template SampledField<std::complex<double>> resample_affine(const SampledField<std::complex<double>>&, std::int64_t,
                                                            const Lattice&);
template SampledField<double> partial_derivative(const SampledField<double>&, const MultiIndex&);
template SampledField<std::complex<double>> partial_derivative(const SampledField<std::complex<double>>&,
                                                               const MultiIndex&);

}  // namespace cmw::analysis
