#include <gtest/gtest.h>

#include <cmath>

#include "harnack/harnack_check.hpp"
#include "test_support.hpp"

using namespace harnack;

namespace {

BivariatePolynomial line() {
  BivariatePolynomial p(1);
  p(0, 0) = p(1, 0) = p(0, 1) = 1.0;
  return p;
}

}  // namespace

TEST(TwoToOne, LineOrigin) {
  const auto r = two_to_one_check(line(), 0, 0);
  EXPECT_EQ(r.count, 2);
  EXPECT_FALSE(r.degenerate);
  // conjugate pair z = e^{+-2 pi i/3}
  for (const auto& pt : r.points) EXPECT_NEAR(std::abs(pt[0]), kTwoPi / 3, 1e-9);
}

TEST(TwoToOne, UniformDegreeTwoInterior) {
  const auto p = characteristic_polynomial(EdgeWeights::uniform(2));
  for (auto [x, y] : {std::pair{0.3, -0.1}, {-0.4, 0.2}}) {
    ASSERT_TRUE(amoeba_membership(p, x, y));
    EXPECT_EQ(two_to_one_check(p, x, y).count, 2);
  }
}

TEST(TwoToOne, NodeIsOneDoublePoint) {
  // the uniform d=3 curve has its real node at (1, 1), over the origin
  const auto p = characteristic_polynomial(EdgeWeights::uniform(3));
  const auto r = two_to_one_check(p, 0, 0);
  ASSERT_EQ(r.count, 1);
  EXPECT_EQ(r.multiplicity[0], 2);
  EXPECT_TRUE(r.degenerate);
}

TEST(Ovals, LineHasOnlyUnboundedBranches) {
  const auto ov = trace_real_ovals(line(), {-6, 6, -6, 6});
  EXPECT_EQ(compact_oval_count(ov), 0);
  EXPECT_EQ(ov.size(), 3u);  // one branch in each quadrant the line meets
  for (const auto& o : ov)
    for (const auto& pt : o.points) EXPECT_NEAR(1 + pt[0] + pt[1], 0.0, 1e-8 * (1 + std::abs(pt[0]) + std::abs(pt[1])));
}

TEST(Ovals, RandomDegreeThreeMatchesHole) {
  auto gen = harnack::testing::rng(31);
  const auto p = characteristic_polynomial(harnack::testing::random_weights(3, gen));
  const Window w = auto_window(p, 3);
  const auto ov = trace_real_ovals(p, w);
  ASSERT_EQ(compact_oval_count(ov), 1);
  const auto h = detect_holes(p, rasterize_amoeba(p, w, 300, 300));
  ASSERT_EQ(h.genus, 1);
  for (const auto& o : ov)
    if (o.closed) EXPECT_NEAR(o.log_area, h.holes[0].area, 0.05 * h.holes[0].area);
}

TEST(Ovals, CountBoundedByGenusFormula) {
  auto gen = harnack::testing::rng(32);
  for (int d = 2; d <= 4; ++d) {
    const auto p = characteristic_polynomial(harnack::testing::random_weights(d, gen));
    EXPECT_LE(compact_oval_count(trace_real_ovals(p, auto_window(p, 3))), (d - 1) * (d - 2) / 2);
  }
}

TEST(Nodes, UniformDegreeThree) {
  const auto p = characteristic_polynomial(EdgeWeights::uniform(3));
  const auto n = find_real_nodes(p, auto_window(p, 3));
  ASSERT_EQ(n.size(), 1u);
  EXPECT_NEAR(n[0][0], 1.0, 1e-8);
  EXPECT_NEAR(n[0][1], 1.0, 1e-8);
}

TEST(Certificate, LinePasses) {
  const auto c = verify_harnack(line());
  EXPECT_TRUE(c.pass) << c.message;
}

TEST(Certificate, SpectralCurvesPass) {
  auto gen = harnack::testing::rng(33);
  for (int d = 2; d <= 3; ++d) {
    const auto c = verify_harnack(characteristic_polynomial(harnack::testing::random_weights(d, gen)));
    EXPECT_TRUE(c.pass) << d << " " << c.message << " area " << c.area_ratio;
  }
}

TEST(Certificate, ComplexBoundaryFails) {
  BivariatePolynomial p(2);
  p(0, 0) = p(2, 0) = p(0, 2) = 1.0;
  p(1, 0) = p(0, 1) = 0.5;
  p(1, 1) = 0.1;
  const auto c = verify_harnack(p);
  EXPECT_FALSE(c.pass);
  EXPECT_FALSE(c.boundary_real);
}
