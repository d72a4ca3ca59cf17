#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "cmw/analysis/differences.hpp"
#include "cmw/analysis/grid.hpp"

namespace cmw::analysis {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Riemann-sum L^p norm (sum |f|^p h^n)^(1/p); p = infinity gives max |f|.
// Throws ParameterError unless 1 <= p <= infinity.
template <class T>
double grid_lp_norm(const SampledField<T>& f, double p);

// l^p norm of a finite sequence; 0 for the empty sequence.
double seq_lp_norm(std::span<const double> a, double p);

// Lattice displacements h with |h|_2 <= t in physical units, h = 0 included.
std::vector<Lattice> lattice_ball(const Grid& grid, double t);

// omega_{m,p}(f, t): max of ||Delta^m_h f||_p over lattice h with |h|_2 <= t.
// Displacements whose difference grid is empty are skipped.
template <class T>
double modulus_of_continuity(const SampledField<T>& f, unsigned m, double p, double t);

// omega_{m,p}(f, t) for several radii at once, sharing the difference norms.
template <class T>
std::vector<double> modulus_profile(const SampledField<T>& f, unsigned m, double p, std::span<const double> radii);

// sum over |alpha| <= m of sup |d^alpha f|.
template <class T>
double cm_norm(const SampledField<T>& f, unsigned m);

// A norm split into its lower-order part and the smoothness seminorm.
struct SmoothnessNorm {
  double base = 0.0;
  double seminorm = 0.0;
  double total() const { return base + seminorm; }
};

// C^[s] norm plus, summed over |alpha| = [s], the sup over sample pairs of
// |d^alpha f(x) - d^alpha f(y)| / |x - y|_2^{s - [s]}. Throws ParameterError
// for s <= 0 or integer s, GridTooCoarse from the derivative stencils.
template <class T>
SmoothnessNorm holder_seminorm(const SampledField<T>& f, double s);

// C^{m-1} norm plus, summed over |alpha| = m - 1, the sup over lattice h != 0
// of ||Delta^2_h d^alpha f||_inf / |h|_inf. Throws ParameterError for m = 0.
template <class T>
SmoothnessNorm zygmund_seminorm(const SampledField<T>& f, unsigned m);

struct BesovParams {
  double s = 0.5;
  double p = 2.0;
  double q = 2.0;
  unsigned m = 1;
  std::size_t t_levels = 8;
};

// ||f||_p plus the discretized L^q((0,1], dt) norm of t^{-s-1/q} omega_{m,p}(f,t)
// on t_j = 2^-j, j < t_levels, with weights t_j - t_{j+1}; q = infinity
// takes sup_j t_j^{-s} omega. Throws ParameterError if m <= s, s <= 0,
// t_levels < 4 or q < 1.
template <class T>
double besov_norm_mc(const SampledField<T>& f, const BesovParams& params);

// (t_j, omega_{1,inf}(f, t_j)) at t_j = spacing * 2^(levels-1-j), so t runs
// from coarse to one grid step. Throws ParameterError for levels < 2.
template <class T>
std::vector<std::pair<double, double>> uniform_continuity_profile(const SampledField<T>& f, std::size_t t_levels);

// Profile non-increasing in j and its finest value below `threshold`.
bool uniformly_continuous_at_grid_scale(const std::vector<std::pair<double, double>>& profile, double threshold);

}  // namespace cmw::analysis
