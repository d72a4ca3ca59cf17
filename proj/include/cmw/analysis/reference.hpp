#pragma once

// Straightforward single-threaded versions of the parallel kernels. They are
// kept for cross-checking and benchmarking only: no blocking, no shared
// difference norms, direct formulas throughout.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "cmw/analysis/grid.hpp"

namespace cmw::analysis::reference {

double grid_lp_norm(const SampledFunction& f, double p);

// Binomial form sum_k (-1)^(m-k) C(m,k) f(x + k h) on the shrunken grid.
SampledFunction finite_difference(const SampledFunction& f, const Lattice& h, unsigned m);

double modulus_of_continuity(const SampledFunction& f, unsigned m, double p, double t);

// sup over sample pairs of |f(x) - f(y)| / |x - y|^beta, 0 < beta <= 1.
double holder_pair_sup(const SampledFunction& f, double beta);

// sup over lattice h != 0 of ||Delta^2_h f||_inf / |h|_inf.
double zygmund_sup(const SampledFunction& f);

// Composite Simpson on [a, b] with `panels` panels (rounded up to even).
double simpson(const std::function<double(double)>& g, double a, double b, std::size_t panels);

// Trapezoid transform (2 pi)^(-1/2) sum w_k e^{-i y x_k} f(x_k) h, real and
// imaginary parts interleaved per frequency.
std::vector<double> fourier_trapezoid(const SampledFunction& f, std::span<const double> y);

}  // namespace cmw::analysis::reference
