#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "cmw/analysis/grid.hpp"

namespace testing_support {

using cmw::analysis::SampledFunction;

// Lattice coordinates (in grid steps) of every sample, keyed to its value.
inline std::map<std::vector<std::int64_t>, double> by_lattice(const SampledFunction& f) {
  std::map<std::vector<std::int64_t>, double> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto x = f.grid.point(i);
    std::vector<std::int64_t> k(x.size());
    for (std::size_t a = 0; a < x.size(); ++a) k[a] = std::llround(x[a] / f.grid.spacing());
    out[k] = f.values[i];
  }
  return out;
}

// Random trigonometric polynomial sum_k (a_k cos(k x) + b_k sin(k x)) with
// frequencies 1..3 sampled on [0, 2 pi] with `n` points.
inline SampledFunction random_trig(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  double a[4], b[4];
  for (int k = 1; k <= 3; ++k) {
    a[k] = c(rng);
    b[k] = c(rng);
  }
  const double h = 2.0 * M_PI / static_cast<double>(n - 1);
  return cmw::analysis::sample_1d(0.0, h, n, [&](double x) {
    double v = 0.0;
    for (int k = 1; k <= 3; ++k) v += a[k] * std::cos(k * x) + b[k] * std::sin(k * x);
    return v;
  });
}

}  // namespace testing_support
