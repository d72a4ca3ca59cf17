#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace cmw::analysis {

// Uniform axis-aligned grid: point (i_1, ..., i_n) sits at
// origin + spacing * (i_1, ..., i_n). Values are stored row-major with the
// last axis fastest.
class Grid {
 public:
  Grid() = default;
  // Throws ParameterError for spacing <= 0, empty extents or mismatched
  // origin/shape lengths.
  Grid(std::vector<double> origin, double spacing, std::vector<std::size_t> shape);

  std::size_t dim() const noexcept { return shape_.size(); }
  std::size_t size() const noexcept { return size_; }
  double spacing() const noexcept { return spacing_; }
  const std::vector<double>& origin() const noexcept { return origin_; }
  const std::vector<std::size_t>& shape() const noexcept { return shape_; }
  const std::vector<std::size_t>& strides() const noexcept { return strides_; }

  // Cell volume h^n used by Riemann sums.
  double cell_volume() const;
  std::vector<std::size_t> unflatten(std::size_t flat) const;
  std::size_t flatten(std::span<const std::size_t> index) const;
  double coordinate(std::size_t axis, std::size_t i) const { return origin_[axis] + spacing_ * static_cast<double>(i); }
  std::vector<double> point(std::size_t flat) const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::vector<double> origin_;
  double spacing_ = 1.0;
  std::vector<std::size_t> shape_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

// Samples of f on a grid. All values must be finite.
template <class T>
struct SampledField {
  Grid grid;
  std::vector<T> values;

  SampledField() = default;
  // Throws DimensionMismatch on a count mismatch and ParameterError on a
  // non-finite value.
  SampledField(Grid g, std::vector<T> v);

  std::size_t size() const noexcept { return values.size(); }
  const T& operator[](std::size_t flat) const { return values[flat]; }
};

using SampledFunction = SampledField<double>;
using ComplexSampledFunction = SampledField<std::complex<double>>;

// Displacement in grid steps, one entry per axis.
using Lattice = std::vector<std::int64_t>;

SampledFunction sample(const Grid& grid, const std::function<double(std::span<const double>)>& f);
// `count` points lo, lo + h, ..., lo + (count - 1) h.
SampledFunction sample_1d(double lo, double spacing, std::size_t count, const std::function<double(double)>& f);

}  // namespace cmw::analysis
