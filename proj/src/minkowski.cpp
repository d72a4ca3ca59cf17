#include "cmw/analysis/minkowski.hpp"

#include <algorithm>
#include <cmath>

#include "cmw/error.hpp"

namespace cmw::analysis {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

Polytope::Polytope(std::vector<Halfspace> halfspaces) : halfspaces_(std::move(halfspaces)) {
  if (halfspaces_.empty()) throw Error(ErrorKind::ParameterError, "a polytope needs at least one halfspace");
  dim_ = halfspaces_.front().normal.size();
  for (const auto& h : halfspaces_) {
    if (h.normal.size() != dim_) throw Error(ErrorKind::ParameterError, "halfspace normals differ in length");
    if (!(h.offset > 0.0) || !std::isfinite(h.offset)) {
      throw Error(ErrorKind::ParameterError, "halfspace offsets must be positive so that 0 is interior");
    }
  }
}

bool Polytope::contains(std::span<const double> x) const {
  if (x.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "point has the wrong dimension");
  return std::all_of(halfspaces_.begin(), halfspaces_.end(),
                     [&](const Halfspace& h) { return dot(h.normal, x) <= h.offset; });
}

Polytope Polytope::linf_box(std::size_t n, double r) {
  std::vector<Halfspace> hs;
  for (std::size_t k = 0; k < n; ++k) {
    for (const double sign : {1.0, -1.0}) {
      std::vector<double> normal(n, 0.0);
      normal[k] = sign;
      hs.push_back({std::move(normal), r});
    }
  }
  return Polytope(std::move(hs));
}

Polytope Polytope::l1_ball(std::size_t n, double r) {
  std::vector<Halfspace> hs;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<double> normal(n);
    for (std::size_t k = 0; k < n; ++k) normal[k] = (mask >> k) & 1 ? -1.0 : 1.0;
    hs.push_back({std::move(normal), r});
  }
  return Polytope(std::move(hs));
}

double minkowski_functional(const Polytope& a, std::span<const double> x) {
  if (x.size() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "point has the wrong dimension");
  double best = 0.0;
  for (const auto& h : a.halfspaces()) best = std::max(best, dot(h.normal, x) / h.offset);
  return best;
}

}  // namespace cmw::analysis
