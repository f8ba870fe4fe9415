#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "ellipsograph/error.hpp"

namespace ellipsograph {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// LEGO grid pitch in millimetres.
inline constexpr double kStudMm = 8.0;

constexpr double studs_to_mm(double studs) noexcept { return studs * kStudMm; }
constexpr double mm_to_studs(double mm) noexcept { return mm / kStudMm; }

/// Maps an angle into [0, 2pi).
inline double normalize_angle(double theta) noexcept {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

namespace detail {
inline void require(bool ok, const char* what) {
  if (!ok) throw ValidationError(what);
}
}  // namespace detail

/// Point in the drawing plane, millimetres. Components are always finite.
class Point2 {
 public:
  constexpr Point2() noexcept = default;
  Point2(double x, double y) : x_(x), y_(y) {
    detail::require(std::isfinite(x) && std::isfinite(y), "Point2 components must be finite");
  }

  constexpr double x() const noexcept { return x_; }
  constexpr double y() const noexcept { return y_; }

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x_ + b.x_, a.y_ + b.y_}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x_ - b.x_, a.y_ - b.y_}; }
  friend constexpr bool operator==(Point2 a, Point2 b) noexcept = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
};

inline double distance(Point2 a, Point2 b) noexcept { return std::hypot(a.x() - b.x(), a.y() - b.y()); }

/// z-component of (b - a) x (c - a).
inline double cross(Point2 a, Point2 b, Point2 c) noexcept {
  return (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
}

/// Axis-aligned ellipse.
class EllipseSpec {
 public:
  EllipseSpec(double semi_x, double semi_y, Point2 center = {})
      : semi_x_(semi_x), semi_y_(semi_y), center_(center) {
    detail::require(std::isfinite(semi_x) && semi_x > 0.0, "ellipse semi_x must be positive");
    detail::require(std::isfinite(semi_y) && semi_y > 0.0, "ellipse semi_y must be positive");
  }

  double semi_x() const noexcept { return semi_x_; }
  double semi_y() const noexcept { return semi_y_; }
  Point2 center() const noexcept { return center_; }
  double major() const noexcept { return std::max(semi_x_, semi_y_); }
  double minor() const noexcept { return std::min(semi_x_, semi_y_); }

  /// Standard parametrization (semi_x cos t, semi_y sin t) + center.
  Point2 point_at(double t) const {
    return {center_.x() + semi_x_ * std::cos(t), center_.y() + semi_y_ * std::sin(t)};
  }

 private:
  double semi_x_;
  double semi_y_;
  Point2 center_;
};

/// Zero exactly on the ellipse, negative inside, positive outside.
inline double implicit_residual(const EllipseSpec& e, Point2 p) noexcept {
  const double u = (p.x() - e.center().x()) / e.semi_x();
  const double v = (p.y() - e.center().y()) / e.semi_y();
  return u * u + v * v - 1.0;
}

/// Foci on the longer axis; a circle has both foci at its center.
inline std::pair<Point2, Point2> foci(const EllipseSpec& e) {
  const double a = e.semi_x();
  const double b = e.semi_y();
  const double c = std::sqrt(std::abs(a * a - b * b));
  const Point2 o = e.center();
  if (a >= b) return {Point2{o.x() + c, o.y()}, Point2{o.x() - c, o.y()}};
  return {Point2{o.x(), o.y() + c}, Point2{o.x(), o.y() - c}};
}

/// |pF1| + |pF2|; equals twice the major semi-axis on the ellipse.
inline double focal_sum(const EllipseSpec& e, Point2 p) {
  const auto [f1, f2] = foci(e);
  return distance(p, f1) + distance(p, f2);
}

struct Tolerances {
  double residual_tol = 1e-12;
  double solver_tol = 1e-9;  // mm
  double angle_tol = 1e-6;   // rad

  void validate() const {
    detail::require(residual_tol > 0.0 && solver_tol > 0.0 && angle_tol > 0.0,
                    "tolerances must be strictly positive");
  }
};

/// Closed arc [lo, hi] of rod angles, 0 <= lo <= hi <= 2pi.
struct Arc {
  double lo;
  double hi;

  double width() const noexcept { return hi - lo; }
  friend constexpr bool operator==(const Arc&, const Arc&) noexcept = default;
};

/// Union of disjoint closed arcs on the circle of rod angles.
///
/// Arcs are kept sorted and merged; an arc crossing angle 0 is stored as two
/// pieces [lo, 2pi] and [0, hi]. The full circle is the single arc [0, 2pi].
class AngleSet {
 public:
  AngleSet() = default;

  static AngleSet empty() { return {}; }
  static AngleSet full() { return from_arcs({Arc{0.0, kTwoPi}}); }

  /// Arc running counter-clockwise from `lo` to `hi`. Endpoints may be any
  /// finite angles; a span of 2pi or more yields the full circle.
  static AngleSet from_arc(double lo, double hi) {
    detail::require(std::isfinite(lo) && std::isfinite(hi), "arc endpoints must be finite");
    detail::require(hi >= lo, "arc requires hi >= lo");
    if (hi - lo >= kTwoPi) return full();
    const double start = normalize_angle(lo);
    const double end = start + (hi - lo);
    if (end <= kTwoPi) return from_arcs({Arc{start, end}});
    return from_arcs({Arc{start, kTwoPi}, Arc{0.0, end - kTwoPi}});
  }

  /// Builds a set from arcs already inside [0, 2pi]; overlapping or touching
  /// arcs are merged.
  static AngleSet from_arcs(std::vector<Arc> arcs) {
    for (const Arc& a : arcs) {
      detail::require(a.lo >= 0.0 && a.hi <= kTwoPi && a.lo <= a.hi,
                      "arcs must satisfy 0 <= lo <= hi <= 2pi");
    }
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
      return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    AngleSet s;
    for (const Arc& a : arcs) {
      if (!s.arcs_.empty() && a.lo <= s.arcs_.back().hi) {
        s.arcs_.back().hi = std::max(s.arcs_.back().hi, a.hi);
      } else {
        s.arcs_.push_back(a);
      }
    }
    return s;
  }

  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  bool is_empty() const noexcept { return arcs_.empty(); }
  bool is_full() const noexcept {
    return arcs_.size() == 1 && arcs_.front().lo == 0.0 && arcs_.front().hi == kTwoPi;
  }

  double measure() const noexcept {
    double m = 0.0;
    for (const Arc& a : arcs_) m += a.width();
    return m;
  }

  /// Closure of the gaps between arcs.
  AngleSet complement() const {
    std::vector<Arc> gaps;
    double cursor = 0.0;
    for (const Arc& a : arcs_) {
      if (a.lo > cursor) gaps.push_back({cursor, a.lo});
      cursor = a.hi;
    }
    if (cursor < kTwoPi) gaps.push_back({cursor, kTwoPi});
    return from_arcs(std::move(gaps));
  }

  /// Boundary angles count as contained.
  bool contains(double theta) const noexcept {
    const double t = normalize_angle(theta);
    for (const Arc& a : arcs_) {
      if (t >= a.lo && t <= a.hi) return true;
    }
    // normalize_angle never returns 2pi, but an arc ending at 2pi contains 0.
    return t == 0.0 && !arcs_.empty() && arcs_.back().hi == kTwoPi;
  }

  AngleSet unite(const AngleSet& other) const {
    std::vector<Arc> all = arcs_;
    all.insert(all.end(), other.arcs_.begin(), other.arcs_.end());
    return from_arcs(std::move(all));
  }

  AngleSet intersect(const AngleSet& other) const {
    std::vector<Arc> out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < arcs_.size() && j < other.arcs_.size()) {
      const Arc& a = arcs_[i];
      const Arc& b = other.arcs_[j];
      const double lo = std::max(a.lo, b.lo);
      const double hi = std::min(a.hi, b.hi);
      if (lo <= hi) out.push_back({lo, hi});
      if (a.hi < b.hi) ++i; else ++j;
    }
    return from_arcs(std::move(out));
  }

  /// Measure of the symmetric difference.
  double distance_to(const AngleSet& other) const {
    return unite(other).measure() - intersect(other).measure();
  }

  /// Image of the set under theta -> sign * theta + offset (sign is +1 or -1).
  AngleSet mapped(double sign, double offset) const {
    detail::require(sign == 1.0 || sign == -1.0, "sign must be +1 or -1");
    AngleSet out;
    for (const Arc& a : arcs_) {
      const double p = sign * a.lo + offset;
      const double q = sign * a.hi + offset;
      out = out.unite(from_arc(std::min(p, q), std::max(p, q)));
    }
    return out;
  }

 private:
  std::vector<Arc> arcs_;
};

}  // namespace ellipsograph
