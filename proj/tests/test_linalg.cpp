#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "cmw/error.hpp"
#include "cmw/linalg.hpp"

using namespace cmw::linalg;
using cmw::ErrorKind;
using cmw::numbers::Int;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const cmw::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::ParseError;
}

Rational Q(std::int64_t p, std::int64_t q = 1) { return Rational(Int(p), Int(q)); }
ComplexRational C(std::int64_t re, std::int64_t im) { return ComplexRational(Q(re), Q(im)); }

Rational random_q(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  return Q(num(rng), den(rng));
}

ComplexRational random_c(std::mt19937_64& rng) { return ComplexRational(random_q(rng), random_q(rng)); }

RationalMatrix random_rational(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_q(rng);
  return m;
}

ComplexMatrix random_complex(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  ComplexMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_c(rng);
  return m;
}

// Low-rank matrix: product of random r x k and k x c factors.
RationalMatrix random_low_rank(std::size_t r, std::size_t c, std::size_t k, std::mt19937_64& rng) {
  return random_rational(r, k, rng) * random_rational(k, c, rng);
}

// Determinant by cofactor expansion; independent of row reduction.
Rational det(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  Rational acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    const Rational term = a(0, j) * det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

TEST(Linalg, ShapeChecks) {
  EXPECT_EQ(kind_of([] { RationalMatrix(0, 2); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([] { RationalMatrix(2, 2, {Q(1)}); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([] { RationalMatrix{{Q(1), Q(2)}, {Q(3)}}; }), ErrorKind::DimensionMismatch);
  const auto e2 = RationalMatrix::unit_vector(3, 2);
  EXPECT_EQ(e2, (RationalMatrix{{Q(0)}, {Q(1)}, {Q(0)}}));
  EXPECT_EQ(kind_of([] { RationalMatrix::unit_vector(3, 0); }), ErrorKind::DimensionMismatch);
}

TEST(Linalg, Elementwise) {
  std::mt19937_64 rng(5);
  const auto a = random_rational(2, 3, rng);
  EXPECT_EQ(a + RationalMatrix(2, 3), a);
  EXPECT_TRUE((a - a).is_zero());
  const auto n = -a;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(n(i, j), -a(i, j));
  EXPECT_EQ(scale(Q(2), a), a + a);
  EXPECT_EQ(kind_of([&] { a + RationalMatrix(3, 2); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([&] { a - RationalMatrix(3, 3); }), ErrorKind::DimensionMismatch);
}

TEST(Linalg, ProductExamples) {
  const RationalMatrix a{{Q(9), Q(6), Q(7)}, {Q(8), Q(-5), Q(4)}, {Q(0), Q(-1), Q(2)}};
  const RationalMatrix v{{Q(1)}, {Q(-4)}, {Q(-5)}};
  EXPECT_EQ(a * v, (RationalMatrix{{Q(-50)}, {Q(8)}, {Q(-6)}}));

  const RationalMatrix b{{Q(-10), Q(7), Q(5), Q(8)}, {Q(5), Q(7), Q(6), Q(9)}, {Q(0), Q(8), Q(7), Q(4)}};
  const RationalMatrix c{{Q(1), Q(10)}, {Q(-1), Q(0)}, {Q(1), Q(8)}, {Q(-1), Q(9)}};
  EXPECT_EQ(b * c, (RationalMatrix{{Q(-20), Q(12)}, {Q(-5), Q(179)}, {Q(-5), Q(92)}}));

  EXPECT_EQ(RationalMatrix::identity(3) * a, a);
  EXPECT_EQ(kind_of([&] { a * c; }), ErrorKind::DimensionMismatch);
}

TEST(Linalg, Conjugates) {
  const RationalMatrix row{{Q(1), Q(2), Q(3)}};
  const auto col = transpose(row);
  EXPECT_EQ(col.rows(), 3u);
  EXPECT_EQ(col.cols(), 1u);
  const ComplexMatrix i{{ComplexRational::i()}};
  EXPECT_EQ(dagger(i), (ComplexMatrix{{C(0, -1)}}));
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const auto a = random_rational(3, 3, rng), b = random_rational(3, 3, rng);
    EXPECT_EQ(transpose(a * b), transpose(b) * transpose(a));
    const auto x = random_complex(2, 3, rng), y = random_complex(3, 2, rng);
    EXPECT_EQ(dagger(x * y), dagger(y) * dagger(x));
    EXPECT_EQ(dagger(dagger(x)), x);
  }
}

TEST(Linalg, InverseExamples) {
  EXPECT_EQ(inverse(RationalMatrix::identity(4)), RationalMatrix::identity(4));
  EXPECT_EQ(kind_of([] { inverse(RationalMatrix{{Q(1), Q(2)}, {Q(2), Q(4)}}); }), ErrorKind::Singular);
  EXPECT_EQ(inverse(RationalMatrix{{Q(2), Q(0)}, {Q(0), Q(4)}}), (RationalMatrix{{Q(1, 2), Q(0)}, {Q(0), Q(1, 4)}}));
  EXPECT_EQ(kind_of([] { inverse(RationalMatrix(2, 3)); }), ErrorKind::DimensionMismatch);
  const ComplexMatrix z{{C(0, 1), C(0, 0)}, {C(0, 0), C(2, 0)}};
  EXPECT_EQ(inverse(z), (ComplexMatrix{{C(0, -1), C(0, 0)}, {C(0, 0), ComplexRational(Q(1, 2))}}));
}

// Invertibility matches a non-zero cofactor determinant, and when invertible
// the inverse is two-sided.
TEST(Linalg, InverseMatchesDeterminant) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const auto a = (t % 3 == 0 && n > 1) ? random_low_rank(n, n, n - 1, rng) : random_rational(n, n, rng);
    const bool invertible = !det(a).is_zero();
    if (invertible) {
      const auto inv = inverse(a);
      EXPECT_EQ(a * inv, RationalMatrix::identity(n));
      EXPECT_EQ(inv * a, RationalMatrix::identity(n));
      EXPECT_TRUE(kernel_basis(a).empty());
    } else {
      EXPECT_EQ(kind_of([&] { inverse(a); }), ErrorKind::Singular);
      EXPECT_FALSE(kernel_basis(a).empty());
    }
  }
}

TEST(Linalg, KernelAndImageExamples) {
  EXPECT_TRUE(kernel_basis(RationalMatrix::identity(3)).empty());
  const RationalMatrix s{{Q(1), Q(2)}, {Q(2), Q(4)}};
  const auto k = kernel_basis(s);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (RationalMatrix{{Q(-2)}, {Q(1)}}));
  EXPECT_EQ(kernel_basis(RationalMatrix(2, 2)).size(), 2u);

  EXPECT_EQ(image_basis(RationalMatrix::identity(3)).size(), 3u);
  const auto im = image_basis(s);
  ASSERT_EQ(im.size(), 1u);
  EXPECT_EQ(im[0], (RationalMatrix{{Q(1)}, {Q(2)}}));
  EXPECT_TRUE(image_basis(RationalMatrix(2, 3)).empty());
}

// Rank-nullity, A v = 0 on the kernel, and both spaces closed under random
// linear combinations.
TEST(Linalg, KernelImageProperties) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    const auto a = random_low_rank(r, c, 1 + rng() % 3, rng);
    const auto ker = kernel_basis(a);
    const auto img = image_basis(a);
    EXPECT_EQ(img.size() + ker.size(), c);
    EXPECT_EQ(img.size(), rank(a));
    for (const auto& v : ker) EXPECT_TRUE((a * v).is_zero());
    if (!ker.empty()) {
      RationalMatrix combo(c, 1);
      for (const auto& v : ker) combo = combo + scale(random_q(rng), v);
      EXPECT_TRUE((a * combo).is_zero());
    }
    // Any A x lies in the span of the image basis: appending it keeps the rank.
    const auto x = random_rational(c, 1, rng);
    const auto y = a * x;
    RationalMatrix span(r, img.size() + 1);
    for (std::size_t j = 0; j < img.size(); ++j)
      for (std::size_t i = 0; i < r; ++i) span(i, j) = img[j](i, 0);
    for (std::size_t i = 0; i < r; ++i) span(i, img.size()) = y(i, 0);
    EXPECT_EQ(rank(span), img.size());
  }
}

TEST(Linalg, Eigenpairs) {
  const auto i3 = RationalMatrix::identity(3);
  EXPECT_TRUE(verify_eigenpair(i3, RationalMatrix{{Q(1)}, {Q(-2)}, {Q(5)}}, Q(1)));
  const RationalMatrix d{{Q(2), Q(0)}, {Q(0), Q(3)}};
  EXPECT_TRUE(verify_eigenpair(d, RationalMatrix{{Q(1)}, {Q(0)}}, Q(2)));
  EXPECT_FALSE(verify_eigenpair(d, RationalMatrix{{Q(1)}, {Q(1)}}, Q(2)));
  EXPECT_EQ(kind_of([&] { verify_eigenpair(d, RationalMatrix(2, 1), Q(2)); }), ErrorKind::ZeroVector);
  const ComplexMatrix rot{{C(0, 0), C(-1, 0)}, {C(1, 0), C(0, 0)}};
  EXPECT_TRUE(verify_eigenpair(rot, ComplexMatrix{{C(1, 0)}, {C(0, -1)}}, C(0, 1)));
}

TEST(Linalg, Classification) {
  const auto id = classify_matrix(RationalMatrix::identity(3));
  EXPECT_TRUE(id.symmetric && id.hermitian && id.orthogonal && id.unitary);
  const auto rot = classify_matrix(RationalMatrix{{Q(0), Q(-1)}, {Q(1), Q(0)}});
  EXPECT_TRUE(rot.orthogonal);
  EXPECT_FALSE(rot.symmetric);
  const auto herm = classify_matrix(ComplexMatrix{{C(1, 0), C(0, 1)}, {C(0, -1), C(1, 0)}});
  EXPECT_TRUE(herm.hermitian);
  EXPECT_FALSE(herm.symmetric);
  EXPECT_FALSE(herm.unitary);
  const auto sing = classify_matrix(RationalMatrix{{Q(1), Q(1)}, {Q(1), Q(1)}});
  EXPECT_TRUE(sing.symmetric);
  EXPECT_FALSE(sing.orthogonal || sing.unitary);
  const auto u = classify_matrix(ComplexMatrix{{C(0, 1), C(0, 0)}, {C(0, 0), C(1, 0)}});
  EXPECT_TRUE(u.unitary);
  EXPECT_FALSE(u.orthogonal);
}

TEST(Linalg, CompositionIsProduct) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    const auto a = random_rational(2, 3, rng), b = random_rational(3, 4, rng), v = random_rational(4, 1, rng);
    EXPECT_EQ(a * (b * v), (a * b) * v);
  }
}

TEST(Linalg, VectorSpaceAxioms) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 40; ++t) {
    const auto u = random_complex(3, 2, rng), v = random_complex(3, 2, rng), w = random_complex(3, 2, rng);
    const auto s = random_c(rng), r = random_c(rng);
    const ComplexMatrix zero(3, 2);
    EXPECT_EQ((u + v) + w, u + (v + w));
    EXPECT_EQ(u + v, v + u);
    EXPECT_EQ(u + zero, u);
    EXPECT_EQ(u + (-u), zero);
    EXPECT_EQ(scale(s, scale(r, u)), scale(s * r, u));
    EXPECT_EQ(scale(ComplexRational(Q(1)), u), u);
    EXPECT_EQ(scale(s, u + v), scale(s, u) + scale(s, v));
    EXPECT_EQ(scale(s + r, u), scale(s, u) + scale(r, u));
    EXPECT_EQ(scale(ComplexRational(Q(0)), u), zero);
    EXPECT_EQ(scale(ComplexRational(Q(-1)), u), -u);
  }
}

TEST(Linalg, AdjointLaw) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const auto a = random_complex(n, n, rng), x = random_complex(n, 1, rng), y = random_complex(n, 1, rng);
    EXPECT_EQ(inner_product(x, a * y), inner_product(dagger(a) * x, y));
  }
}
