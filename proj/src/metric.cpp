#include "cmw/metric.hpp"

#include "cmw/error.hpp"

namespace cmw::metric {

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> points, Distance dist)
    : points_(std::move(points)), dist_(std::make_shared<const Distance>(std::move(dist))) {}

FiniteMetricSpace FiniteMetricSpace::from_matrix(std::vector<std::string> points,
                                                 std::vector<std::vector<Rational>> d) {
  if (d.size() != points.size()) throw Error(ErrorKind::DimensionMismatch, "distance matrix row count mismatch");
  for (const auto& row : d) {
    if (row.size() != points.size()) throw Error(ErrorKind::DimensionMismatch, "distance matrix is not square");
  }
  auto table = std::make_shared<const std::vector<std::vector<Rational>>>(std::move(d));
  return FiniteMetricSpace(std::move(points), [table](std::size_t i, std::size_t j) { return (*table)[i][j]; });
}

FiniteMetricSpace FiniteMetricSpace::rational_line(const std::vector<Rational>& xs) {
  std::vector<std::string> ids;
  ids.reserve(xs.size());
  for (const auto& x : xs) ids.push_back(x.to_string());
  return FiniteMetricSpace(std::move(ids), [xs](std::size_t i, std::size_t j) { return line_distance(xs[i], xs[j]); });
}

std::size_t FiniteMetricSpace::index_of(const std::string& id) const {
  const auto it = std::find(points_.begin(), points_.end(), id);
  if (it == points_.end()) throw Error(ErrorKind::UnknownPoint, "no point '" + id + "' in the space");
  return static_cast<std::size_t>(it - points_.begin());
}

bool verify_metric(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Rational dxy = space.distance(x, y);
      if (dxy.sign() < 0) return false;                       // M1
      if (dxy.is_zero() != (x == y)) return false;            // M2
      if (dxy != space.distance(y, x)) return false;          // M3
      for (std::size_t z = 0; z < n; ++z) {
        if (dxy > space.distance(x, z) + space.distance(z, y)) return false;  // M4
      }
    }
  }
  return true;
}

std::vector<std::string> ball_members(const FiniteMetricSpace& space, const std::string& center, const Rational& r,
                                      bool closed) {
  const std::size_t c = space.index_of(center);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const Rational d = space.distance(c, i);
    if (closed ? d <= r : d < r) out.push_back(space.point(i));
  }
  return out;
}

std::vector<std::string> epsilon_net_greedy(const FiniteMetricSpace& space, const Rational& eps) {
  if (eps.sign() <= 0) throw Error(ErrorKind::ParameterError, "net radius must be positive");
  std::vector<bool> covered(space.size(), false);
  std::vector<std::string> centers;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (covered[i]) continue;
    centers.push_back(space.point(i));
    for (std::size_t j = 0; j < space.size(); ++j) {
      if (!covered[j] && space.distance(i, j) <= eps) covered[j] = true;
    }
  }
  return centers;
}

Rational completion_distance(const CauchyPoint<Rational>& x, const CauchyPoint<Rational>& y, const Rational& eps) {
  if (eps.sign() <= 0) throw Error(ErrorKind::ParameterError, "completion tolerance must be positive");
  return completion_distance(x, y, eps, line_distance);
}

CauchyPoint<Rational> constant_point(const Rational& q) {
  return {[q](std::size_t) { return q; }, [](const Rational&) { return std::size_t{0}; }};
}

CauchyPoint<Rational> harmonic_point(const Rational& q) {
  return {[q](std::size_t k) { return q + Rational(numbers::Int(1), numbers::Int(static_cast<std::int64_t>(k) + 1)); },
          [](const Rational& eps) {
            const auto n = (Rational(3) / eps).ceil();
            const std::uint64_t v = n.sign() > 0 ? n.abs().to_u64() : 0;
            return static_cast<std::size_t>(std::max<std::uint64_t>(v, 1));
          }};
}

}  // namespace cmw::metric
