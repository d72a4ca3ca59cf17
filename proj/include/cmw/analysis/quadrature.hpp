#pragma once

#include <cstddef>
#include <functional>

namespace cmw::analysis {

inline constexpr std::size_t kDefaultPanels = 4096;
inline constexpr double kQuadratureRelTol = 1e-6;

// Composite Simpson on [a, b]. Samples are taken in parallel and summed in
// a fixed blocked order. `panels` is rounded up to an even count >= 2.
// `g` must be safe to call concurrently.
double simpson(const std::function<double(double)>& g, double a, double b, std::size_t panels = kDefaultPanels);

struct QuadratureResult {
  double value = 0.0;   // refined estimate, 2 * panels
  double coarse = 0.0;  // estimate with `panels`
  double abs_integral = 0.0;
};

// Simpson with one doubling of the panel count as convergence check:
// |I_2N - I_N| <= rel_tol * integral of |g|. Throws NoConvergence otherwise.
QuadratureResult integrate_checked(const std::function<double(double)>& g, double a, double b,
                                   std::size_t panels = kDefaultPanels, double rel_tol = kQuadratureRelTol);

}  // namespace cmw::analysis
