#pragma once

// Dense exact matrices over Rational or ComplexRational. No floating point.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "cmw/error.hpp"
#include "cmw/numbers/complex.hpp"
#include "cmw/numbers/rational.hpp"

namespace cmw::linalg {

using numbers::ComplexRational;
using numbers::Rational;

template <class F>
class Matrix {
 public:
  // Zero matrix. Throws DimensionMismatch for an empty shape.
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, F(Rational(0))) {
    check_shape();
  }
  Matrix(std::size_t rows, std::size_t cols, std::vector<F> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    check_shape();
    if (entries_.size() != rows_ * cols_) {
      throw Error(ErrorKind::DimensionMismatch, "entry count does not match the matrix shape");
    }
  }
  Matrix(std::initializer_list<std::initializer_list<F>> rows) : rows_(rows.size()), cols_(0) {
    if (rows_ > 0) cols_ = rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
      entries_.insert(entries_.end(), r.begin(), r.end());
    }
    check_shape();
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(Rational(1));
    return m;
  }
  // e^n_k as an n x 1 column, 1-based k.
  static Matrix unit_vector(std::size_t n, std::size_t k) {
    if (k < 1 || k > n) throw Error(ErrorKind::DimensionMismatch, "unit vector index outside 1..n");
    Matrix m(n, 1);
    m(k - 1, 0) = F(Rational(1));
    return m;
  }
  static Matrix column(const std::vector<F>& v) { return Matrix(v.size(), 1, v); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<F>& entries() const noexcept { return entries_; }

  F& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : entries_) {
      if (!numbers::is_zero(x)) return false;
    }
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  void check_shape() const {
    if (rows_ == 0 || cols_ == 0) throw Error(ErrorKind::DimensionMismatch, "matrix needs at least one row and column");
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<F> entries_;
};

using RationalMatrix = Matrix<Rational>;
using ComplexMatrix = Matrix<ComplexRational>;

namespace detail {

template <class F>
void require_same_shape(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "entrywise operation on matrices of different shape");
  }
}

template <class F>
void require_square(const Matrix<F>& a, const char* what) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, std::string(what) + " needs a square matrix");
}

}  // namespace detail

template <class F>
Matrix<F> operator+(const Matrix<F>& a, const Matrix<F>& b) {
  detail::require_same_shape(a, b);
  Matrix<F> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

template <class F>
Matrix<F> operator-(const Matrix<F>& a) {
  Matrix<F> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = -a(i, j);
  return out;
}

template <class F>
Matrix<F> operator-(const Matrix<F>& a, const Matrix<F>& b) {
  detail::require_same_shape(a, b);
  Matrix<F> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

template <class F>
Matrix<F> scale(const F& s, const Matrix<F>& a) {
  Matrix<F> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  return out;
}

// (AB)_{ij} = sum_k a_{ik} b_{kj}
template <class F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "product needs a.cols == b.rows");
  Matrix<F> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      F acc(Rational(0));
      for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

template <class F>
Matrix<F> transpose(const Matrix<F>& a) {
  Matrix<F> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

// A^dagger(i, j) = A(j, i)*
template <class F>
Matrix<F> dagger(const Matrix<F>& a) {
  Matrix<F> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = numbers::conj(a(i, j));
  return out;
}

inline ComplexMatrix to_complex(const RationalMatrix& a) {
  std::vector<ComplexRational> e;
  e.reserve(a.entries().size());
  for (const auto& x : a.entries()) e.emplace_back(x);
  return ComplexMatrix(a.rows(), a.cols(), std::move(e));
}

// Reduced row-echelon form with the list of pivot columns. Pivots are the
// first non-zero entry in column order.
template <class F>
struct RowEchelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;
};

template <class F>
RowEchelon<F> rref(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::optional<std::size_t> pivot;
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (!numbers::is_zero(m(r, col))) {
        pivot = r;
        break;
      }
    }
    if (!pivot) continue;
    if (*pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(*pivot, j), m(row, j));
    }
    const F inv_p = F(Rational(1)) / m(row, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = m(row, j) * inv_p;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || numbers::is_zero(m(r, col))) continue;
      const F factor = m(r, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) - factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& a) {
  return rref(a).pivots.size();
}

// Gauss-Jordan on [A | I]. Throws Singular; the result satisfies A A^-1 = I.
template <class F>
Matrix<F> inverse(const Matrix<F>& a) {
  detail::require_square(a, "inverse");
  const std::size_t n = a.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = F(Rational(1));
  }
  const auto red = rref(std::move(aug));
  if (red.pivots.size() < n || red.pivots[n - 1] != n - 1) {
    throw Error(ErrorKind::Singular, "matrix is not invertible");
  }
  Matrix<F> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = red.reduced(i, n + j);
  if (!(a * out == Matrix<F>::identity(n))) throw Error(ErrorKind::Singular, "inverse check A A^-1 = I failed");
  return out;
}

// Null space basis from the free columns of the reduced form. Empty for a
// trivial kernel.
template <class F>
std::vector<Matrix<F>> kernel_basis(const Matrix<F>& a) {
  const auto red = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (const auto p : red.pivots) is_pivot[p] = true;
  std::vector<Matrix<F>> out;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Matrix<F> v(a.cols(), 1);
    v(free, 0) = F(Rational(1));
    for (std::size_t r = 0; r < red.pivots.size(); ++r) v(red.pivots[r], 0) = -red.reduced(r, free);
    out.push_back(std::move(v));
  }
  return out;
}

// Pivot columns of the original matrix.
template <class F>
std::vector<Matrix<F>> image_basis(const Matrix<F>& a) {
  const auto red = rref(a);
  std::vector<Matrix<F>> out;
  for (const auto p : red.pivots) {
    Matrix<F> c(a.rows(), 1);
    for (std::size_t i = 0; i < a.rows(); ++i) c(i, 0) = a(i, p);
    out.push_back(std::move(c));
  }
  return out;
}

// Exact check of A v = lambda v. Throws ZeroVector for v = 0 and
// DimensionMismatch for incompatible shapes.
template <class F>
bool verify_eigenpair(const Matrix<F>& a, const Matrix<F>& v, const F& lambda) {
  detail::require_square(a, "eigenpair check");
  if (v.cols() != 1 || v.rows() != a.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "eigenvector must be a column matching the matrix");
  }
  if (v.is_zero()) throw Error(ErrorKind::ZeroVector, "eigenvector must be non-zero");
  return a * v == scale(lambda, v);
}

struct MatrixClass {
  bool symmetric = false;
  bool hermitian = false;
  bool orthogonal = false;
  bool unitary = false;
};

// Orthogonal means A^-1 = A^T, unitary A^-1 = A^dagger; both false for a
// singular matrix.
template <class F>
MatrixClass classify_matrix(const Matrix<F>& a) {
  detail::require_square(a, "classification");
  MatrixClass c;
  const Matrix<F> at = transpose(a);
  const Matrix<F> ad = dagger(a);
  c.symmetric = a == at;
  c.hermitian = a == ad;
  try {
    const Matrix<F> inv = inverse(a);
    c.orthogonal = inv == at;
    c.unitary = inv == ad;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Singular) throw;
  }
  return c;
}

// <x, y> = sum conj(x_k) y_k for columns.
template <class F>
F inner_product(const Matrix<F>& x, const Matrix<F>& y) {
  if (x.cols() != 1 || y.cols() != 1 || x.rows() != y.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "inner product needs equal-length columns");
  }
  F acc(Rational(0));
  for (std::size_t k = 0; k < x.rows(); ++k) acc = acc + numbers::conj(x(k, 0)) * y(k, 0);
  return acc;
}

}  // namespace cmw::linalg
