#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "cmw/error.hpp"
#include "cmw/metric.hpp"

using namespace cmw::metric;
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

FiniteMetricSpace integers(int n) {
  std::vector<Rational> xs;
  for (int i = 0; i < n; ++i) xs.push_back(Q(i));
  return FiniteMetricSpace::rational_line(xs);
}

std::vector<std::string> labels(std::initializer_list<int> xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(std::to_string(x));
  return out;
}

// q + (-1)^k / 2^k; for j, k >= n, |x_j - x_k| <= 2^(1-n).
CauchyPoint<Rational> alternating_point(const Rational& q) {
  return {[q](std::size_t k) {
            const Rational t = cmw::numbers::pow(Q(1, 2), static_cast<unsigned>(k));
            return k % 2 ? q - t : q + t;
          },
          [](const Rational& eps) {
            std::size_t n = 0;
            Rational bound = Q(2);
            while (bound > eps) {
              bound = bound / Q(2);
              ++n;
            }
            return n;
          }};
}

}  // namespace

TEST(Metric, VerifyExamples) {
  EXPECT_TRUE(verify_metric(FiniteMetricSpace::rational_line({Q(0), Q(1), Q(2)})));
  EXPECT_TRUE(verify_metric(FiniteMetricSpace::rational_line({Q(7)})));
  const std::vector<Rational> xs{Q(0), Q(1), Q(2)};
  const FiniteMetricSpace signed_space({"0", "1", "2"}, [xs](std::size_t i, std::size_t j) { return xs[i] - xs[j]; });
  EXPECT_FALSE(verify_metric(signed_space));
  // Triangle failure: d(a,c) = 3 > d(a,b) + d(b,c) = 2.
  const auto tri = FiniteMetricSpace::from_matrix({"a", "b", "c"}, {{Q(0), Q(1), Q(3)}, {Q(1), Q(0), Q(1)}, {Q(3), Q(1), Q(0)}});
  EXPECT_FALSE(verify_metric(tri));
  // Two distinct points at distance 0.
  const auto pseudo = FiniteMetricSpace::from_matrix({"a", "b"}, {{Q(0), Q(0)}, {Q(0), Q(0)}});
  EXPECT_FALSE(verify_metric(pseudo));
  EXPECT_EQ(kind_of([] { FiniteMetricSpace::from_matrix({"a", "b"}, {{Q(0)}}); }), ErrorKind::DimensionMismatch);
}

TEST(Metric, Balls) {
  const auto z = integers(10);
  EXPECT_TRUE(ball_members(z, "3", Q(0), false).empty());
  EXPECT_EQ(ball_members(z, "3", Q(0), true), labels({3}));
  EXPECT_EQ(ball_members(z, "3", Q(2), false), labels({2, 3, 4}));
  EXPECT_EQ(ball_members(z, "3", Q(2), true), labels({1, 2, 3, 4, 5}));
  EXPECT_EQ(kind_of([&] { ball_members(z, "42", Q(1), false); }), ErrorKind::UnknownPoint);
}

TEST(Metric, EpsilonNetExamples) {
  const auto z = integers(10);
  EXPECT_EQ(epsilon_net_greedy(z, Q(5, 2)), labels({0, 3, 6, 9}));
  EXPECT_EQ(epsilon_net_greedy(z, Q(100)), labels({0}));
  EXPECT_TRUE(epsilon_net_greedy(FiniteMetricSpace::rational_line({}), Q(1)).empty());
}

TEST(Metric, EpsilonNetCoversRandomSpaces) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<Rational> xs;
    const std::size_t n = 1 + rng() % 25;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(Q(static_cast<std::int64_t>(rng() % 200) - 100, 1 + rng() % 4));
    const auto space = FiniteMetricSpace::rational_line(xs);
    const Rational eps = Q(1 + rng() % 20, 1 + rng() % 3);
    const auto net = epsilon_net_greedy(space, eps);
    for (std::size_t p = 0; p < space.size(); ++p) {
      bool covered = false;
      for (const auto& c : net) covered = covered || space.distance(p, space.index_of(c)) <= eps;
      EXPECT_TRUE(covered);
    }
    // Greedy centers are pairwise more than eps apart.
    for (std::size_t i = 0; i < net.size(); ++i)
      for (std::size_t j = i + 1; j < net.size(); ++j)
        EXPECT_GT(space.distance(space.index_of(net[i]), space.index_of(net[j])), eps);
  }
}

TEST(Metric, CompletionExamples) {
  const auto h = harmonic_point(Q(0));
  for (const auto& eps : {Q(1), Q(1, 10), Q(1, 1000)}) {
    EXPECT_EQ(completion_distance(h, h, eps), Q(0));
    EXPECT_LE(completion_distance(constant_point(Q(0)), h, eps), eps);
    EXPECT_EQ(completion_distance(constant_point(Q(0)), constant_point(Q(3)), eps), Q(3));
  }
  EXPECT_EQ(kind_of([&] { completion_distance(h, h, Q(0)); }), ErrorKind::ParameterError);
}

// Each probe lies within eps of the exact limit distance |p - q|.
TEST(Metric, CompletionAccuracy) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 60; ++t) {
    const Rational p = Q(static_cast<std::int64_t>(rng() % 40) - 20, 1 + rng() % 7);
    const Rational q = Q(static_cast<std::int64_t>(rng() % 40) - 20, 1 + rng() % 7);
    const Rational eps = Q(1, 1 + rng() % 500);
    const auto x = harmonic_point(p);
    const auto y = alternating_point(q);
    EXPECT_LE((completion_distance(x, y, eps) - (p - q).abs()).abs(), eps);
  }
}

TEST(Metric, CompletionSymmetryAndTriangle) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 60; ++t) {
    auto pick = [&]() {
      const Rational q = Q(static_cast<std::int64_t>(rng() % 30) - 15, 1 + rng() % 5);
      switch (rng() % 3) {
        case 0: return constant_point(q);
        case 1: return harmonic_point(q);
        default: return alternating_point(q);
      }
    };
    const auto x = pick(), y = pick(), z = pick();
    const Rational eps = Q(1, 1 + rng() % 100);
    EXPECT_EQ(completion_distance(x, y, eps), completion_distance(y, x, eps));
    EXPECT_LE(completion_distance(x, z, eps),
              completion_distance(x, y, eps) + completion_distance(y, z, eps) + Q(3) * eps);
  }
}

// Same completion point iff probes shrink to 0.
TEST(Metric, CompletionEquivalence) {
  const auto a = harmonic_point(Q(1, 2));
  const auto b = alternating_point(Q(1, 2));
  const auto c = alternating_point(Q(1, 3));
  Rational eps = Q(1);
  for (int k = 0; k < 7; ++k) {
    eps = eps / Q(4);
    EXPECT_LE(completion_distance(a, b, eps), eps);
    EXPECT_GE(completion_distance(a, c, eps), Q(1, 6) - eps);
  }
}

// A Cauchy point whose terms stay in a finite set B has distance to B
// tending to 0 along shrinking probes.
TEST(Metric, FiniteSetsAreClosed) {
  const std::vector<Rational> b{Q(-2), Q(0), Q(1, 3), Q(5)};
  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> prefix;
    for (int i = 0; i < 8; ++i) prefix.push_back(b[rng() % b.size()]);
    const Rational tail = b[rng() % b.size()];
    const CauchyPoint<Rational> x{[prefix, tail](std::size_t k) { return k < prefix.size() ? prefix[k] : tail; },
                                  [n = prefix.size()](const Rational&) { return n; }};
    Rational eps = Q(1);
    for (int k = 0; k < 6; ++k) {
      eps = eps / Q(10);
      Rational best = completion_distance(x, constant_point(b[0]), eps);
      for (const auto& q : b) best = std::min(best, completion_distance(x, constant_point(q), eps));
      EXPECT_LE(best, eps);
    }
  }
}
