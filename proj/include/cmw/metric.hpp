#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cmw/numbers/rational.hpp"

namespace cmw::metric {

using numbers::Rational;

// Finite point set with a rational distance callback over point indices.
class FiniteMetricSpace {
 public:
  using Distance = std::function<Rational(std::size_t, std::size_t)>;

  FiniteMetricSpace() = default;
  FiniteMetricSpace(std::vector<std::string> points, Distance dist);
  // Throws DimensionMismatch unless `d` is |points| x |points|.
  static FiniteMetricSpace from_matrix(std::vector<std::string> points, std::vector<std::vector<Rational>> d);
  // Points of Q with d(x, y) = |x - y|, labelled by their "p/q" form.
  static FiniteMetricSpace rational_line(const std::vector<Rational>& xs);

  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::string& point(std::size_t i) const { return points_.at(i); }
  Rational distance(std::size_t i, std::size_t j) const { return (*dist_)(i, j); }
  // Throws UnknownPoint.
  std::size_t index_of(const std::string& id) const;

 private:
  std::vector<std::string> points_;
  std::shared_ptr<const Distance> dist_;
};

// Exhaustive M1-M4 check over all point triples.
bool verify_metric(const FiniteMetricSpace& space);

// Open ball uses d < r, closed ball d <= r. Throws UnknownPoint.
std::vector<std::string> ball_members(const FiniteMetricSpace& space, const std::string& center, const Rational& r,
                                      bool closed);

// Greedy cover in point-list order: take the first uncovered point, cover
// everything within eps of it, repeat.
std::vector<std::string> epsilon_net_greedy(const FiniteMetricSpace& space, const Rational& eps);

// A point of the completion: a Cauchy sequence in a base space with an
// explicit modulus.
template <class P>
struct CauchyPoint {
  std::function<P(std::size_t)> term;
  std::function<std::size_t(const Rational&)> modulus;
};

// d(x_N, y_N) at N = max of both moduli at eps/4; within eps of
// lim d(x_k, y_k).
template <class P, class Dist>
Rational completion_distance(const CauchyPoint<P>& x, const CauchyPoint<P>& y, const Rational& eps, Dist&& dist) {
  const Rational quarter = eps / Rational(4);
  const std::size_t n = std::max(x.modulus(quarter), y.modulus(quarter));
  return dist(x.term(n), y.term(n));
}

inline Rational line_distance(const Rational& a, const Rational& b) { return (a - b).abs(); }

// Completion distance on Q with |x - y|. Throws ParameterError for eps <= 0.
Rational completion_distance(const CauchyPoint<Rational>& x, const CauchyPoint<Rational>& y, const Rational& eps);

CauchyPoint<Rational> constant_point(const Rational& q);
// q + 1/(k+1), modulus max(ceil(3/eps), 1).
CauchyPoint<Rational> harmonic_point(const Rational& q);

}  // namespace cmw::metric
