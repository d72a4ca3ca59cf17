#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cmw/analysis/grid.hpp"

namespace cmw::analysis {

// alpha in N^n with |alpha| = sum alpha_k.
struct MultiIndex {
  std::vector<unsigned> alpha;

  unsigned order() const;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

// All alpha in N^n with |alpha| = order, lexicographically decreasing
// (so (order, 0, ..., 0) comes first).
std::vector<MultiIndex> multi_indices(std::size_t n, unsigned order);
// Multi-index counting how often each axis occurs in an index path.
MultiIndex multi_index_of_path(std::size_t n, const std::vector<std::size_t>& path);

// (Delta^m_h f)(x) with Delta^m = Delta(Delta^{m-1}) on the shrunken grid of
// points where every shift stays in range. Throws ShiftOutOfRange when no
// point remains and ParameterError for m = 0 or a wrong-length h.
template <class T>
SampledField<T> finite_difference(const SampledField<T>& f, const Lattice& h, unsigned m);

// g(x) = f(a x - b) sampled on the same spacing as f. Requires f's origin and
// b to lie on the lattice spacing * Z^n and a to be a non-zero integer; g's
// samples are copies of f's, which makes difference identities exact. The
// returned grid covers every lattice x with a x - b inside f's grid.
template <class T>
SampledField<T> resample_affine(const SampledField<T>& f, std::int64_t a, const Lattice& b_steps);

// Second-order estimate of d^alpha f: central differences inside, one-sided
// stencils of the same order at the boundary. Odd orders use the first
// derivative stencil, pairs use the second derivative stencil. Throws
// GridTooCoarse if an axis is too short for its stencil.
template <class T>
SampledField<T> partial_derivative(const SampledField<T>& f, const MultiIndex& alpha);

}  // namespace cmw::analysis
