#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "harnack/divisor.hpp"
#include "test_support.hpp"

using namespace harnack;

namespace {

double null_residual(const EdgeWeights& wt, cplx z, cplx w, const Eigen::VectorXcd& u) {
  return (u.transpose() * to_eigen(assemble_K(wt, z, w))).norm();
}

}  // namespace

TEST(LeftNullVector, ScalarCase) {
  const auto wt = EdgeWeights::uniform(1);
  const auto u = left_null_vector(wt, std::polar(1.0, kTwoPi / 3), std::polar(1.0, -kTwoPi / 3));
  ASSERT_EQ(u.size(), 1);
  EXPECT_NEAR(std::abs(u(0) - 1.0), 0.0, 1e-15);
  EXPECT_THROW(left_null_vector(wt, 1.0, 1.0), ValidationError);
}

TEST(LeftNullVector, AnnihilatesAtComplexPoints) {
  auto g = harnack::testing::rng(41);
  for (int d = 2; d <= 4; ++d) {
    const auto wt = harnack::testing::random_weights(d, g);
    const auto P = characteristic_polynomial(wt);
    for (double phi : {0.3, 1.7, 2.9}) {
      const cplx z = std::polar(1.2, phi);
      for (cplx w : roots(ComplexPoly(P.w_coeffs(z)))) {
        const auto u = left_null_vector(wt, z, w);
        EXPECT_NEAR(u.norm(), 1.0, 1e-12);
        EXPECT_LT(null_residual(wt, z, w, u), 1e-10);
      }
    }
  }
}

TEST(LeftNullVector, RealOnRealOval) {
  auto g = harnack::testing::rng(42);
  const auto wt = harnack::testing::random_weights(3, g);
  const auto P = characteristic_polynomial(wt);
  const auto ovals = trace_real_ovals(P, area_window(P));
  int checked = 0;
  for (const auto& o : ovals) {
    if (!o.closed) continue;
    for (std::size_t k = 0; k < o.points.size(); k += 17) {
      const auto u = left_null_vector(wt, o.points[k][0], o.points[k][1]);
      EXPECT_LT(u.imag().norm(), 1e-10);
      EXPECT_LT(null_residual(wt, o.points[k][0], o.points[k][1], u), 1e-10);
      ++checked;
    }
  }
  EXPECT_GT(checked, 5);
}

TEST(LeftNullVector, NodeIsSingular) {
  const auto wt = EdgeWeights::uniform(3);
  const auto P = characteristic_polynomial(wt);
  const auto nodes = find_real_nodes(P, auto_window(P, 3));
  ASSERT_EQ(nodes.size(), 1u);
  EXPECT_THROW(left_null_vector(wt, nodes[0][0], nodes[0][1]), Error);
}

TEST(VertexDivisor, DegreeTwoIsEmpty) {
  auto g = harnack::testing::rng(43);
  for (int k = 0; k < 5; ++k) {
    const auto wt = harnack::testing::random_weights(2, g);
    for (int v = 0; v < 4; ++v) EXPECT_TRUE(vertex_divisor(wt, v).empty());
    EXPECT_TRUE(is_standard_divisor({}, {}));
  }
}

TEST(VertexDivisor, DegreeThreeStandard) {
  auto g = harnack::testing::rng(31);
  for (int k = 0; k < 8; ++k) {
    const auto wt = harnack::testing::random_weights(3, g);
    const auto P = characteristic_polynomial(wt);
    for (int v : {0, 4, 8}) {
      const auto rep = divisor_report(wt, v);
      ASSERT_EQ(rep.points.size(), 1u);
      ASSERT_EQ(rep.sections.size(), 1u);
      EXPECT_TRUE(is_standard_divisor(rep.points, rep.ovals));
      const auto& p = rep.points[0];
      EXPECT_LT(std::abs(P.eval(p.z, p.w)) / P.scale(std::abs(p.z), std::abs(p.w)), 1e-8);
      // the vertex component vanishes there
      const auto u = real_left_null_vector(wt, p.z, p.w);
      EXPECT_LT(std::abs(u(v)), 1e-6);
    }
  }
}

TEST(VertexDivisor, SignChangeParityMatchesHolonomy) {
  auto g = harnack::testing::rng(44);
  for (int d = 3; d <= 4; ++d)
    for (int k = 0; k < 3; ++k) {
      const auto rep = divisor_report(harnack::testing::random_weights(d, g), 0);
      for (const auto& s : rep.sections) EXPECT_EQ(s.sign_changes % 2 == 1, s.holonomy < 0);
    }
}

TEST(VertexDivisor, DuplicatedPointIsNotStandard) {
  auto g = harnack::testing::rng(45);
  const auto rep = divisor_report(harnack::testing::random_weights(3, g), 0);
  ASSERT_EQ(rep.points.size(), 1u);
  auto pts = rep.points;
  pts.push_back(pts[0]);
  EXPECT_FALSE(is_standard_divisor(pts, rep.ovals));
  EXPECT_FALSE(is_standard_divisor({}, rep.ovals));
}

TEST(VertexDivisor, GaugeCovariance) {
  auto g = harnack::testing::rng(46);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  for (int k = 0; k < 3; ++k) {
    const auto wt = harnack::testing::random_weights(3, g);
    GaugeVector gv{Grid(3, 1.0), Grid(3, 1.0)};
    for (double& x : gv.white.values()) x = u(g);
    for (double& x : gv.black.values()) x = u(g);
    for (int v : {0, 5}) {
      const auto a = vertex_divisor(wt, v), b = vertex_divisor(apply_gauge(wt, gv), v);
      ASSERT_EQ(a.size(), b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_NEAR(a[i].z, b[i].z, 1e-6 * std::max(1.0, std::abs(a[i].z)));
        EXPECT_NEAR(a[i].w, b[i].w, 1e-6 * std::max(1.0, std::abs(a[i].w)));
      }
    }
  }
}

TEST(VertexDivisor, DegreeFourBestEffort) {
  auto g = harnack::testing::rng(47);
  const auto wt = harnack::testing::random_weights(4, g);
  const auto rep = divisor_report(wt, 0);
  EXPECT_EQ(static_cast<int>(rep.points.size()), 3);
  EXPECT_TRUE(is_standard_divisor(rep.points, rep.ovals));
}

TEST(VertexDivisor, VertexRange) {
  EXPECT_THROW(vertex_divisor(EdgeWeights::uniform(3), 9), ValidationError);
}
