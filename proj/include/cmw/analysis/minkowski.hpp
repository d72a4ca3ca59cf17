#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cmw::analysis {

// {x : <normal, x> <= offset}.
struct Halfspace {
  std::vector<double> normal;
  double offset = 1.0;
};

// Intersection of halfspaces. Every offset is positive, so 0 is interior.
class Polytope {
 public:
  // Throws ParameterError for an empty list, a non-positive offset or
  // normals of differing length.
  explicit Polytope(std::vector<Halfspace> halfspaces);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Halfspace>& halfspaces() const noexcept { return halfspaces_; }
  bool contains(std::span<const double> x) const;

  // Unit l^inf box, normals +-e_k with offset r.
  static Polytope linf_box(std::size_t n, double r = 1.0);
  // l^1 ball of radius r, normals (+-1, ..., +-1).
  static Polytope l1_ball(std::size_t n, double r = 1.0);

 private:
  std::vector<Halfspace> halfspaces_;
  std::size_t dim_ = 0;
};

// inf {t > 0 : x / t in A} = max(0, max_i <a_i, x> / c_i).
// Throws DimensionMismatch if x has the wrong length.
double minkowski_functional(const Polytope& a, std::span<const double> x);

}  // namespace cmw::analysis
