#pragma once

// OpenMP reduction kernels. Sums are split into fixed-size blocks; each block
// is summed left to right and the block partials are combined in block
// order, so the result is bit-identical for every thread count.

#include <algorithm>
#include <cstddef>
#include <vector>

#include <omp.h>

namespace cmw::analysis::kernels {

inline constexpr std::size_t kSumBlock = 1024;
// Below this many iterations the loops stay serial.
inline constexpr std::size_t kParallelThreshold = 4096;

template <class G>
double blocked_sum(std::size_t n, G&& g) {
  const std::size_t blocks = (n + kSumBlock - 1) / kSumBlock;
  std::vector<double> partial(blocks, 0.0);
  const auto nb = static_cast<std::ptrdiff_t>(blocks);
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::ptrdiff_t b = 0; b < nb; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kSumBlock;
    const std::size_t hi = std::min(n, lo + kSumBlock);
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += g(i);
    partial[static_cast<std::size_t>(b)] = acc;
  }
  double total = 0.0;
  for (const double p : partial) total += p;
  return total;
}

// max over i of g(i), 0 for n = 0. Max is order-independent.
template <class G>
double parallel_max(std::size_t n, G&& g, std::size_t threshold = kParallelThreshold) {
  double best = 0.0;
  const auto ni = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1) reduction(max : best) if (n >= threshold)
  for (std::ptrdiff_t i = 0; i < ni; ++i) best = std::max(best, g(static_cast<std::size_t>(i)));
  return best;
}

// out[i] = g(i), elementwise.
template <class T, class G>
void parallel_fill(std::vector<T>& out, G&& g) {
  const auto ni = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static) if (out.size() >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < ni; ++i) out[static_cast<std::size_t>(i)] = g(static_cast<std::size_t>(i));
}

// Evaluate g over a task list in parallel, one task per iteration; used for
// sups over displacement sets where each task is itself a full grid pass.
template <class T, class G>
std::vector<T> parallel_map(std::size_t n, G&& g) {
  std::vector<T> out(n);
  const auto ni = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1) if (n > 1)
  for (std::ptrdiff_t i = 0; i < ni; ++i) out[static_cast<std::size_t>(i)] = g(static_cast<std::size_t>(i));
  return out;
}

}  // namespace cmw::analysis::kernels
