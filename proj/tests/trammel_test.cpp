#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "ellipsograph/trammel.hpp"

using namespace ellipsograph;

namespace {
bool bitwise_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }
bool bitwise_equal(Point2 a, Point2 b) { return bitwise_equal(a.x(), b.x()) && bitwise_equal(a.y(), b.y()); }
}  // namespace

TEST(TrammelConfig, Validation) {
  EXPECT_THROW(TrammelConfig(0.0, 1.0), ValidationError);
  EXPECT_THROW(TrammelConfig(2.0, -1.0), ValidationError);
  EXPECT_THROW(TrammelConfig(2.0, 2.0), ValidationError);  // pen on pivot C
  EXPECT_THROW(TrammelConfig(2.0, 5.0, ShuttleFootprint{-1.0, 8.0}), ValidationError);
  EXPECT_THROW(TrammelConfig(2.0, 5.0, {}, -1.0), ValidationError);
  EXPECT_NO_THROW(TrammelConfig(2.0, 5.0, {}, kUnboundedChannel));
}

TEST(SemiAxes, Examples) {
  auto ax = semi_axes(TrammelConfig(2, 5));
  EXPECT_EQ(ax.along_x, 5.0);
  EXPECT_EQ(ax.along_y, 3.0);
  ax = semi_axes(TrammelConfig(8, 5));
  EXPECT_EQ(ax.along_x, 5.0);
  EXPECT_EQ(ax.along_y, 3.0);
  ax = semi_axes(TrammelConfig(4, 2));
  EXPECT_EQ(ax.along_x, 2.0);
  EXPECT_EQ(ax.along_y, 2.0);
}

TEST(RodState, Examples) {
  const TrammelConfig cfg(2, 5);
  RodState st = rod_state(cfg, 0.0);
  EXPECT_EQ(st.pivot_x, Point2(2, 0));
  EXPECT_EQ(st.pivot_y, Point2(0, 0));
  EXPECT_EQ(st.pen, Point2(5, 0));

  st = rod_state(cfg, kPi / 2);
  EXPECT_NEAR(st.pivot_x.x(), 0.0, 1e-15);
  EXPECT_EQ(st.pivot_y, Point2(0, 2));
  EXPECT_NEAR(st.pen.x(), 0.0, 1e-15);
  EXPECT_EQ(st.pen.y(), -3.0);

  st = rod_state(cfg, kPi / 4);
  EXPECT_NEAR(st.pen.x(), 3.535534, 1e-6);
  EXPECT_NEAR(st.pen.y(), -2.121320, 1e-6);
}

TEST(RodState, InvariantsOverRandomConfigs) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> len(0.5, 300.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double l = len(rng);
    double s = len(rng);
    if (s == l) s += 1.0;
    const TrammelConfig cfg(l, s);
    const EllipseSpec e = traced_ellipse(cfg);
    for (int k = 0; k < 2000; ++k) {
      const RodState st = rod_state(cfg, kTwoPi * k / 2000);
      ASSERT_EQ(st.pivot_x.y(), 0.0);
      ASSERT_EQ(st.pivot_y.x(), 0.0);
      ASSERT_NEAR(distance(st.pivot_x, st.pivot_y), l, 1e-12 * l);
      ASSERT_LE(std::abs(cross(st.pivot_y, st.pivot_x, st.pen)), 1e-9);
      ASSERT_LE(std::abs(implicit_residual(e, st.pen)), 1e-12);
    }
  }
}

TEST(RodState, PeriodicBitwise) {
  // Dyadic angles make theta + 2pi exactly representable, so normalization
  // recovers theta itself.
  const TrammelConfig cfg(40, 140);
  for (int k = 0; k < 4096; ++k) {
    const double theta = std::ldexp(static_cast<double>(k), -11) * 3.0;  // [0, 6)
    const RodState a = rod_state(cfg, theta);
    const RodState b = rod_state(cfg, theta + kTwoPi);
    ASSERT_TRUE(bitwise_equal(a.theta, b.theta)) << theta;
    ASSERT_TRUE(bitwise_equal(a.pen, b.pen));
    ASSERT_TRUE(bitwise_equal(a.pivot_x, b.pivot_x));
    ASSERT_TRUE(bitwise_equal(a.pivot_y, b.pivot_y));
  }
}

TEST(DesignForEllipse, Examples) {
  TrammelConfig cfg = design_for_ellipse(5, 3, PenPlacement::Outside);
  EXPECT_EQ(cfg.pivot_separation(), 2.0);
  EXPECT_EQ(cfg.pen_offset(), 5.0);
  cfg = design_for_ellipse(5, 3, PenPlacement::Between);
  EXPECT_EQ(cfg.pivot_separation(), 8.0);
  EXPECT_EQ(cfg.pen_offset(), 5.0);
  cfg = design_for_ellipse(3, 3, PenPlacement::Between);
  EXPECT_EQ(cfg.pivot_separation(), 6.0);
  EXPECT_EQ(cfg.pen_offset(), 3.0);
}

TEST(DesignForEllipse, Errors) {
  EXPECT_THROW(design_for_ellipse(3, 3, PenPlacement::Outside), ValidationError);
  EXPECT_THROW(design_for_ellipse(0, 3, PenPlacement::Between), ValidationError);
  EXPECT_THROW(design_for_ellipse(3, -1, PenPlacement::Outside), ValidationError);
}

TEST(DesignForEllipse, RoundTripExactOnHalfMillimetreGrid) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> halves(1, 1000);
  for (int trial = 0; trial < 5000; ++trial) {
    const double a = halves(rng) * 0.5;
    const double b = halves(rng) * 0.5;
    for (PenPlacement v : {PenPlacement::Outside, PenPlacement::Between}) {
      if (v == PenPlacement::Outside && a == b) continue;
      const SemiAxes ax = semi_axes(design_for_ellipse(a, b, v));
      const bool same = (ax.along_x == a && ax.along_y == b) || (ax.along_x == b && ax.along_y == a);
      ASSERT_TRUE(same) << a << " " << b << " " << to_string(v);
      if (v == PenPlacement::Between) {
        ASSERT_EQ(ax.along_x, a);
      }
    }
  }
}

TEST(RequiredChannelHalfLength, Examples) {
  EXPECT_EQ(required_channel_half_length(TrammelConfig(56, 10, {32, 8})), 72.0);
  EXPECT_DOUBLE_EQ(required_channel_half_length(TrammelConfig(0.001, 10, {32, 8})), 16.001);
  EXPECT_EQ(required_channel_half_length(TrammelConfig(24, 10, {0, 8})), 24.0);
}
