#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ellipsograph/clearance.hpp"
#include "ellipsograph/geometry.hpp"
#include "ellipsograph/trammel.hpp"

namespace ellipsograph {

/// Sheet of paper in mm.
class PageSpec {
 public:
  PageSpec(double width, double height, double margin = 0.0)
      : width_(width), height_(height), margin_(margin) {
    detail::require(std::isfinite(width) && width > 0.0 && std::isfinite(height) && height > 0.0,
                    "page width and height must be positive");
    detail::require(std::isfinite(margin) && margin >= 0.0, "page margin must be >= 0");
    detail::require(margin < std::min(width, height) / 2.0,
                    "page margin must be less than half the shorter page side");
  }

  /// ISO 216 A4, portrait.
  static PageSpec a4(double margin = 0.0) { return PageSpec(210.0, 297.0, margin); }

  double width() const noexcept { return width_; }
  double height() const noexcept { return height_; }
  double margin() const noexcept { return margin_; }
  PageSpec rotated() const { return PageSpec(height_, width_, margin_); }

 private:
  double width_;
  double height_;
  double margin_;
};

/// Whether the ellipse's bounding box fits the printable area, portrait or
/// landscape.
inline bool fits_page(const EllipseSpec& e, const PageSpec& page) noexcept {
  const double w = 2.0 * e.semi_x();
  const double h = 2.0 * e.semi_y();
  const double pw = page.width() - 2.0 * page.margin();
  const double ph = page.height() - 2.0 * page.margin();
  return (w <= pw && h <= ph) || (w <= ph && h <= pw);
}

/// The page as given if the ellipse fits it, otherwise the page turned
/// landscape if that fits, otherwise the page as given.
inline PageSpec orient_for(const EllipseSpec& e, const PageSpec& page) {
  const double pw = page.width() - 2.0 * page.margin();
  const double ph = page.height() - 2.0 * page.margin();
  if (2.0 * e.semi_x() <= pw && 2.0 * e.semi_y() <= ph) return page;
  if (2.0 * e.semi_x() <= ph && 2.0 * e.semi_y() <= pw) return page.rotated();
  return page;
}

struct TraceSample {
  double theta;  // strictly increasing within a polyline; may exceed 2pi on a wrapped arc
  Point2 pen;
};

using Polyline = std::vector<TraceSample>;

struct Trace {
  std::vector<Polyline> polylines;

  std::size_t point_count() const noexcept {
    std::size_t n = 0;
    for (const auto& p : polylines) n += p.size();
    return n;
  }
};

/// Samples the pen path over every drawable arc. Consecutive points are at
/// most `max_chord` apart; arc endpoints are always emitted. An arc that
/// wraps through angle 0 becomes a single polyline.
inline Trace sample_trace(const TrammelConfig& cfg, const AngleSet& domain, double max_chord) {
  detail::require(std::isfinite(max_chord) && max_chord > 0.0, "max_chord must be positive");
  auto pen_at = [&](double t) { return rod_state(cfg, t).pen; };

  Trace trace;
  for (Arc arc : circular_arcs(domain)) {
    if (arc.lo > arc.hi) arc.hi += kTwoPi;
    Polyline line;
    line.push_back({arc.lo, pen_at(arc.lo)});
    if (arc.hi > arc.lo) {
      // Coarse pieces first so a closed loop never looks like a zero chord.
      const int pieces = std::max(1, static_cast<int>(std::ceil(arc.width() / (kPi / 8.0))));
      for (int i = 0; i < pieces; ++i) {
        const double t1 = i + 1 == pieces ? arc.hi : arc.lo + arc.width() * (i + 1) / pieces;
        // Depth-first bisection; the stack holds right endpoints still to reach.
        std::vector<TraceSample> pending{{t1, pen_at(t1)}};
        while (!pending.empty()) {
          const TraceSample& last = line.back();
          const TraceSample next = pending.back();
          const double mid = 0.5 * (last.theta + next.theta);
          if (distance(last.pen, next.pen) > max_chord && mid > last.theta && mid < next.theta) {
            pending.push_back({mid, pen_at(mid)});
          } else {
            line.push_back(next);
            pending.pop_back();
          }
        }
      }
    }
    trace.polylines.push_back(std::move(line));
  }
  return trace;
}

namespace detail {

inline std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s(buf);
  // Keep "-0.000" out of the output.
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

/// Fixed decimals with trailing zeros trimmed, for attribute values.
inline std::string compact(double v, int decimals = 3) {
  std::string s = fixed(v, decimals);
  if (s.find('.') != std::string::npos) {
    s.erase(s.find_last_not_of('0') + 1);
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

}  // namespace detail

/// Standalone SVG: one polyline per arc, ellipse center at the page center,
/// y pointing down the page, 3-decimal coordinates.
inline std::string to_svg(const Trace& trace, const PageSpec& page) {
  constexpr double slack = 1e-9;
  const double cx = page.width() / 2.0;
  const double cy = page.height() / 2.0;
  const double lo_x = page.margin() - slack;
  const double hi_x = page.width() - page.margin() + slack;
  const double lo_y = page.margin() - slack;
  const double hi_y = page.height() - page.margin() + slack;

  const std::string w = detail::compact(page.width());
  const std::string h = detail::compact(page.height());
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "mm\" height=\"" +
         h + "mm\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  for (const Polyline& line : trace.polylines) {
    out += "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"0.3\" stroke-linejoin=\"round\" points=\"";
    bool first = true;
    for (const TraceSample& s : line) {
      const double x = cx + s.pen.x();
      const double y = cy - s.pen.y();
      if (x < lo_x || x > hi_x || y < lo_y || y > hi_y) {
        throw OutOfPage("trace leaves the printable area at theta=" + detail::fixed(s.theta, 6),
                        s.theta);
      }
      if (!first) out += ' ';
      first = false;
      out += detail::fixed(x, 3);
      out += ',';
      out += detail::fixed(y, 3);
    }
    out += "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

inline constexpr const char* kTraceCsvHeader = "arc,theta_rad,x_mm,y_mm";

/// One row per sample in traversal order, numbers with 9 decimals.
inline std::string to_csv(const Trace& trace) {
  std::string out = std::string(kTraceCsvHeader) + "\n";
  for (std::size_t i = 0; i < trace.polylines.size(); ++i) {
    for (const TraceSample& s : trace.polylines[i]) {
      out += std::to_string(i);
      out += ',';
      out += detail::fixed(s.theta, 9);
      out += ',';
      out += detail::fixed(s.pen.x(), 9);
      out += ',';
      out += detail::fixed(s.pen.y(), 9);
      out += '\n';
    }
  }
  return out;
}

}  // namespace ellipsograph
