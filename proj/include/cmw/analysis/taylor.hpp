#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "cmw/error.hpp"

namespace cmw::analysis {

template <class T>
struct TaylorResult {
  T value{};
  // M |x - x0|^(m+1) / (m+1)!, given |f^(m+1)| <= M between x0 and x.
  T remainder_bound{};
  // terms[k] = f^(k)(x0) / k! (x - x0)^k.
  std::vector<T> terms;
};

// Degree-m Taylor polynomial at x from derivs = (f(x0), f'(x0), ..., f^(m)(x0)),
// m = derivs.size() - 1. T is double or an exact field such as Rational.
template <class T>
TaylorResult<T> taylor_eval_1d(std::span<const T> derivs, const T& x0, const T& x, const T& derivative_bound) {
  if (derivs.empty()) throw Error(ErrorKind::ParameterError, "at least f(x0) is required");
  TaylorResult<T> out;
  const T dx = x - x0;
  T power = T(1);
  T factorial = T(1);
  out.value = T(0);
  for (std::size_t k = 0; k < derivs.size(); ++k) {
    if (k > 0) {
      power = power * dx;
      factorial = factorial * T(static_cast<long>(k));
    }
    out.terms.push_back(derivs[k] * power / factorial);
    out.value = out.value + out.terms.back();
  }
  const T next_power = power * dx;
  const T next_factorial = factorial * T(static_cast<long>(derivs.size()));
  const T mag = next_power < T(0) ? T(0) - next_power : next_power;
  out.remainder_bound = derivative_bound * mag / next_factorial;
  return out;
}

template <class T>
TaylorResult<T> taylor_eval_1d(const std::vector<T>& derivs, const T& x0, const T& x, const T& derivative_bound) {
  return taylor_eval_1d(std::span<const T>(derivs), x0, x, derivative_bound);
}

// Index path (i_1, ..., i_k), 0-based axes. The partial along a path depends
// only on the multiset of its entries, so keys are stored sorted.
using IndexPath = std::vector<std::size_t>;
using PathPartials = std::map<IndexPath, double>;

// All n^k paths in lexicographic order.
std::vector<IndexPath> index_paths(std::size_t n, std::size_t k);

// sum_{k <= m} 1/k! sum over all n^k paths of d_path f(x0) prod (x - x0)_{i_j}.
// Keys of `partials` may be in any order; the empty path carries f(x0).
// Throws MissingPartial if a needed path is absent and DimensionMismatch if
// x0 and x differ in length.
double taylor_eval_nd(const PathPartials& partials, std::span<const double> x0, std::span<const double> x, std::size_t m);

}  // namespace cmw::analysis
