#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "harnack/holes.hpp"
#include "harnack/kasteleyn.hpp"
#include "test_support.hpp"

using namespace harnack;

namespace {

BivariatePolynomial line(double c0 = 1, double c1 = 1, double c2 = 1) {
  BivariatePolynomial p(1);
  p(0, 0) = c0;
  p(1, 0) = c1;
  p(0, 1) = c2;
  return p;
}

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

}  // namespace

TEST(Membership, LineExamples) {
  const auto p = line();
  EXPECT_TRUE(amoeba_membership(p, 0, 0));
  EXPECT_FALSE(amoeba_membership(p, -10, -10));
  EXPECT_FALSE(amoeba_membership(p, 10, 0));
}

TEST(Membership, LineSliceIsExact) {
  // for 1 + z + w the slice at x is [log|1 - e^x|, log(1 + e^x)]
  const auto p = line();
  for (double x : {-2.0, -0.5, 0.7, 1.5}) {
    const auto s = amoeba_slice(p, x);
    ASSERT_EQ(s.intervals.size(), 1u);
    EXPECT_NEAR(s.intervals[0].first, std::log(std::abs(1 - std::exp(x))), 1e-9);
    EXPECT_NEAR(s.intervals[0].second, std::log(1 + std::exp(x)), 1e-9);
  }
}

TEST(Membership, RejectsDegenerateInput) {
  BivariatePolynomial constant(0);
  constant(0, 0) = 1.0;
  EXPECT_THROW(amoeba_membership(constant, 0, 0), ValidationError);
  EXPECT_THROW(rasterize_amoeba(line(), {1, 0, 0, 1}, 32, 32), ValidationError);
  EXPECT_THROW(rasterize_amoeba(line(), {-1, 1, -1, 1}, 8, 32), ValidationError);
}

TEST(Raster, LineAreaWithHalfPixelBand) {
  const double band = 0.5 * 8.0 / 400;
  const auto g = rasterize_amoeba(line(), {-4, 4, -4, 4}, 400, 400, band);
  EXPECT_NEAR(amoeba_area(g).area / (0.5 * kPi2), 1.0, 0.02);
}

TEST(Raster, LineAreaOnWideWindow) {
  const auto g = rasterize_amoeba(line(), {-8, 8, -8, 8}, 600, 600);
  const auto a = amoeba_area(g, line());
  EXPECT_NEAR(a.area / (0.5 * kPi2), 1.0, 0.02);
  EXPECT_EQ(a.unexpected_frame, 0);
  EXPECT_TRUE(a.warning.empty());
}

TEST(Raster, TranslationUnderRescaling) {
  // P(z/2, w) has the amoeba of P shifted by log 2 in x
  const auto p = line(), q = line(1, 0.5, 1);
  const Window w{-4, 4, -4, 4};
  const Window ws{w.x_min + std::log(2.0), w.x_max + std::log(2.0), w.y_min, w.y_max};
  const auto a = rasterize_amoeba(p, w, 200, 200), b = rasterize_amoeba(q, ws, 200, 200);
  int diff = 0;
  for (std::size_t i = 0; i < a.membership.size(); ++i) diff += a.membership[i] != b.membership[i];
  EXPECT_LE(diff, 2);
}

TEST(Raster, ThreadCountDoesNotChangeResult) {
  const auto p = characteristic_polynomial(EdgeWeights::uniform(2));
  const auto a = rasterize_amoeba(p, {-5, 5, -5, 5}, 64, 64, 0.0, 1);
  const auto b = rasterize_amoeba(p, {-5, 5, -5, 5}, 64, 64, 0.0, 3);
  EXPECT_EQ(a.membership, b.membership);
}

TEST(Raster, EmptyWindowHasZeroArea) {
  const auto g = rasterize_amoeba(line(), {-20, -15, -20, -15}, 32, 32);
  EXPECT_EQ(amoeba_area(g).area, 0.0);
}

TEST(Raster, UniformDegreeTwoArea) {
  const auto p = characteristic_polynomial(EdgeWeights::uniform(2));
  const auto g = rasterize_amoeba(p, {-14, 14, -14, 14}, 600, 600);
  EXPECT_NEAR(amoeba_area(g).area / (2 * kPi2), 1.0, 0.02);
}

TEST(Holes, LineHasNone) {
  const auto g = rasterize_amoeba(line(), {-6, 6, -6, 6}, 128, 128);
  const auto h = detect_holes(line(), g);
  EXPECT_EQ(h.genus, 0);
  EXPECT_TRUE(h.holes.empty());
}

TEST(Holes, UniformDegreeThreeHasNodeNotHole) {
  const auto p = characteristic_polynomial(EdgeWeights::uniform(3));
  const auto h = detect_holes(p, rasterize_amoeba(p, auto_window(p, 3), 300, 300));
  EXPECT_EQ(h.genus, 0);
}

TEST(Holes, RandomDegreeThreeHasOneHoleOfOrderOneOne) {
  auto gen = harnack::testing::rng(21);
  const auto p = characteristic_polynomial(harnack::testing::random_weights(3, gen));
  const auto g = rasterize_amoeba(p, auto_window(p, 3), 300, 300);
  const auto h = detect_holes(p, g);
  ASSERT_EQ(h.genus, 1);
  EXPECT_EQ(h.holes[0].order, (std::array<int, 2>{1, 1}));
  EXPECT_GT(h.holes[0].area, 0.0);
  // the facet over the hole is flat: the intercept is the same at other points
  const auto c = h.holes[0].center;
  for (double off : {-0.05, 0.05}) {
    const double x = c[0] + off, y = c[1] - off;
    EXPECT_NEAR(ronkin(p, x, y) - x - y, h.holes[0].intercept, 1e-6);
  }
}

TEST(FacetIntercepts, Corners) {
  for (const auto& [k, v] : facet_intercepts(line())) EXPECT_NEAR(v, 0.0, 1e-9);
  const auto m = facet_intercepts(line(5, 2, 3));
  ASSERT_EQ(m.size(), 3u);
  EXPECT_NEAR(m.at({0, 0}), std::log(5.0), 1e-9);
  EXPECT_NEAR(m.at({1, 0}), std::log(2.0), 1e-9);
  EXPECT_NEAR(m.at({0, 1}), std::log(3.0), 1e-9);
}
