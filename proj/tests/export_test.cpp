#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ellipsograph/export.hpp"
#include "oracles.hpp"

using namespace ellipsograph;

namespace {
double max_chord_of(const Trace& t) {
  double worst = 0;
  for (const auto& line : t.polylines) {
    for (std::size_t i = 1; i < line.size(); ++i) worst = std::max(worst, distance(line[i - 1].pen, line[i].pen));
  }
  return worst;
}
}  // namespace

TEST(PageSpec, Validation) {
  EXPECT_THROW(PageSpec(0, 10), ValidationError);
  EXPECT_THROW(PageSpec(10, 10, 5), ValidationError);
  EXPECT_THROW(PageSpec(10, 10, -1), ValidationError);
  EXPECT_EQ(PageSpec::a4().width(), 210.0);
  EXPECT_EQ(PageSpec::a4().height(), 297.0);
}

TEST(FitsPage, Examples) {
  EXPECT_TRUE(fits_page(EllipseSpec(140, 100), PageSpec::a4(0)));
  EXPECT_FALSE(fits_page(EllipseSpec(150, 100), PageSpec::a4(0)));
  EXPECT_TRUE(fits_page(EllipseSpec(100, 100), PageSpec::a4(5)));
}

TEST(FitsPage, MonotoneUnderShrinking) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> axis(1.0, 200.0);
  std::uniform_real_distribution<double> shrink(0.1, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const double a = axis(rng);
    const double b = axis(rng);
    if (!fits_page(EllipseSpec(a, b), PageSpec::a4(3))) continue;
    ASSERT_TRUE(fits_page(EllipseSpec(a * shrink(rng), b * shrink(rng)), PageSpec::a4(3)));
  }
}

TEST(OrientFor, TurnsLandscapeOnlyWhenNeeded) {
  EXPECT_EQ(orient_for(EllipseSpec(140, 100), PageSpec::a4()).width(), 297.0);
  EXPECT_EQ(orient_for(EllipseSpec(100, 140), PageSpec::a4()).width(), 210.0);
}

TEST(SampleTrace, CircleFullTurn) {
  const TrammelConfig circle(4, 2);
  const Trace t = sample_trace(circle, AngleSet::full(), 0.1);
  ASSERT_EQ(t.polylines.size(), 1u);
  const Polyline& line = t.polylines[0];
  EXPECT_GE(line.size(), 126u);
  EXPECT_EQ(line.front().theta, 0.0);
  EXPECT_EQ(line.back().theta, kTwoPi);
  EXPECT_LE(distance(line.front().pen, line.back().pen), 1e-12);  // closed
  EXPECT_LE(max_chord_of(t), 0.1);
}

TEST(SampleTrace, EmptyDomain) {
  EXPECT_TRUE(sample_trace(TrammelConfig(4, 2), AngleSet::empty(), 0.1).polylines.empty());
}

TEST(SampleTrace, HalfTurnEndpoints) {
  const Trace t = sample_trace(TrammelConfig(2, 5), AngleSet::from_arc(0, kPi), 0.2);
  ASSERT_EQ(t.polylines.size(), 1u);
  EXPECT_EQ(t.polylines[0].front().theta, 0.0);
  EXPECT_EQ(t.polylines[0].back().theta, kPi);
}

TEST(SampleTrace, WrappedArcIsOnePolyline) {
  const Trace t = sample_trace(TrammelConfig(2, 5), AngleSet::from_arc(-0.5, 0.5), 0.05);
  ASSERT_EQ(t.polylines.size(), 1u);
  EXPECT_NEAR(t.polylines[0].front().theta, kTwoPi - 0.5, 1e-15);
  EXPECT_NEAR(t.polylines[0].back().theta, kTwoPi + 0.5, 1e-15);
}

TEST(SampleTrace, PropertiesOverConfigs) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> len(1.0, 150.0);
  std::uniform_real_distribution<double> chord(0.05, 5.0);
  for (int trial = 0; trial < 40; ++trial) {
    const TrammelConfig cfg(len(rng), len(rng));
    const double max_chord = chord(rng);
    const AngleSet domain = AngleSet::from_arcs({{0.3, 1.2}, {2.0, 5.9}});
    const Trace t = sample_trace(cfg, domain, max_chord);
    ASSERT_EQ(t.polylines.size(), 2u);
    const EllipseSpec e = traced_ellipse(cfg);
    for (const auto& line : t.polylines) {
      for (std::size_t i = 0; i < line.size(); ++i) {
        ASSERT_LE(std::abs(implicit_residual(e, line[i].pen)), 1e-9);
        if (i > 0) {
          ASSERT_GT(line[i].theta, line[i - 1].theta);
          ASSERT_LE(distance(line[i - 1].pen, line[i].pen), max_chord);
        }
      }
    }
  }
}

TEST(SampleTrace, RejectsBadChord) {
  EXPECT_THROW(sample_trace(TrammelConfig(4, 2), AngleSet::full(), 0.0), ValidationError);
}

TEST(ToSvg, EmptyTrace) {
  const std::string svg = to_svg(Trace{}, PageSpec::a4());
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("viewBox=\"0 0 210 297\""), std::string::npos);
  EXPECT_NE(svg.find("width=\"210mm\""), std::string::npos);
  EXPECT_EQ(svg.find("<polyline"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(ToSvg, CircleParsesBackInsidePage) {
  const Trace t = sample_trace(TrammelConfig(4, 2), AngleSet::full(), 0.1);
  const std::string svg = to_svg(t, PageSpec::a4());
  const auto lines = oracle::parse_svg_polylines(svg);
  ASSERT_EQ(lines.size(), 1u);
  ASSERT_EQ(lines[0].size(), t.polylines[0].size());
  for (const auto& [x, y] : lines[0]) {
    ASSERT_GE(x, 0.0);
    ASSERT_LE(x, 210.0);
    ASSERT_GE(y, 0.0);
    ASSERT_LE(y, 297.0);
    // Page-centered circle of radius 2.
    ASSERT_NEAR(std::hypot(x - 105.0, y - 148.5), 2.0, 1e-3);
  }
  // y flipped: theta = pi/2 maps above the center (smaller page y).
  const Trace quarter = sample_trace(TrammelConfig(4, 2), AngleSet::from_arc(kPi / 2, kPi / 2), 1.0);
  const auto q = oracle::parse_svg_polylines(to_svg(quarter, PageSpec::a4()));
  EXPECT_NEAR(q[0][0].second, 146.5, 1e-9);
}

TEST(ToSvg, Deterministic) {
  const Trace t = sample_trace(TrammelConfig(40, 140), AngleSet::full(), 0.5);
  const PageSpec page = PageSpec::a4().rotated();
  EXPECT_EQ(to_svg(t, page), to_svg(t, page));
}

TEST(ToSvg, OutOfPageNamesTheta) {
  const Trace t = sample_trace(TrammelConfig(40, 140), AngleSet::full(), 0.5);
  try {
    to_svg(t, PageSpec::a4());  // 280 mm wide does not fit portrait
    FAIL() << "expected OutOfPage";
  } catch (const OutOfPage& e) {
    EXPECT_EQ(e.theta(), 0.0);
    EXPECT_NE(std::string(e.what()).find("theta="), std::string::npos);
  }
}

TEST(ToCsv, HeaderAndRows) {
  EXPECT_EQ(to_csv(Trace{}), "arc,theta_rad,x_mm,y_mm\n");
  Trace one;
  one.polylines.push_back({{0.5, Point2(1.25, -2.5)}});
  EXPECT_EQ(to_csv(one), "arc,theta_rad,x_mm,y_mm\n0,0.500000000,1.250000000,-2.500000000\n");
}

TEST(ToCsv, ParseBackWithinTolerance) {
  const TrammelConfig cfg(40, 140);
  const Trace t = sample_trace(cfg, AngleSet::from_arcs({{0.0, 2.0}, {3.0, 6.0}}), 0.5);
  const auto rows = oracle::parse_trace_csv(to_csv(t));
  ASSERT_EQ(rows.size(), t.point_count());
  std::size_t i = 0;
  const EllipseSpec e = traced_ellipse(cfg);
  for (std::size_t a = 0; a < t.polylines.size(); ++a) {
    for (const auto& s : t.polylines[a]) {
      const auto& r = rows[i++];
      ASSERT_EQ(r.arc, static_cast<int>(a));
      ASSERT_NEAR(r.theta, s.theta, 1e-8);
      ASSERT_NEAR(r.x, s.pen.x(), 1e-8);
      ASSERT_NEAR(r.y, s.pen.y(), 1e-8);
      ASSERT_LE(std::abs(implicit_residual(e, Point2(r.x, r.y))), 1e-6);
    }
  }
}
