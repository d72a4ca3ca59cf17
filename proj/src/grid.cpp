#include "cmw/analysis/grid.hpp"

#include <cmath>

#include "cmw/error.hpp"

namespace cmw::analysis {

Grid::Grid(std::vector<double> origin, double spacing, std::vector<std::size_t> shape)
    : origin_(std::move(origin)), spacing_(spacing), shape_(std::move(shape)) {
  if (shape_.empty() || origin_.size() != shape_.size()) {
    throw Error(ErrorKind::ParameterError, "grid origin and shape must have the same non-zero length");
  }
  if (!(spacing_ > 0.0) || !std::isfinite(spacing_)) throw Error(ErrorKind::ParameterError, "grid spacing must be positive");
  for (const double o : origin_) {
    if (!std::isfinite(o)) throw Error(ErrorKind::ParameterError, "grid origin must be finite");
  }
  strides_.assign(shape_.size(), 1);
  size_ = 1;
  for (std::size_t a = shape_.size(); a-- > 0;) {
    if (shape_[a] == 0) throw Error(ErrorKind::ParameterError, "grid extents must be positive");
    strides_[a] = size_;
    size_ *= shape_[a];
  }
}

double Grid::cell_volume() const { return std::pow(spacing_, static_cast<double>(dim())); }

std::vector<std::size_t> Grid::unflatten(std::size_t flat) const {
  std::vector<std::size_t> idx(dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    idx[a] = flat / strides_[a];
    flat %= strides_[a];
  }
  return idx;
}

std::size_t Grid::flatten(std::span<const std::size_t> index) const {
  std::size_t flat = 0;
  for (std::size_t a = 0; a < dim(); ++a) flat += index[a] * strides_[a];
  return flat;
}

std::vector<double> Grid::point(std::size_t flat) const {
  const auto idx = unflatten(flat);
  std::vector<double> x(dim());
  for (std::size_t a = 0; a < dim(); ++a) x[a] = coordinate(a, idx[a]);
  return x;
}

namespace {
bool finite(double v) { return std::isfinite(v); }
bool finite(const std::complex<double>& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }
}  // namespace

template <class T>
SampledField<T>::SampledField(Grid g, std::vector<T> v) : grid(std::move(g)), values(std::move(v)) {
  if (values.size() != grid.size()) {
    throw Error(ErrorKind::DimensionMismatch, "sample count does not match the grid size");
  }
  for (const auto& x : values) {
    if (!finite(x)) throw Error(ErrorKind::ParameterError, "sampled values must be finite");
  }
}

template struct SampledField<double>;
template struct SampledField<std::complex<double>>;

SampledFunction sample(const Grid& grid, const std::function<double(std::span<const double>)>& f) {
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto x = grid.point(i);
    v[i] = f(x);
  }
  return SampledFunction(grid, std::move(v));
}

SampledFunction sample_1d(double lo, double spacing, std::size_t count, const std::function<double(double)>& f) {
  Grid g({lo}, spacing, {count});
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = f(g.coordinate(0, i));
  return SampledFunction(std::move(g), std::move(v));
}

}  // namespace cmw::analysis
