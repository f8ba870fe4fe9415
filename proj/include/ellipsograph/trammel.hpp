#pragma once

#include <cmath>
#include <limits>
#include <string_view>

#include "ellipsograph/geometry.hpp"

namespace ellipsograph {

/// Bounding box of a sliding shuttle, in mm. `length` runs along the
/// shuttle's channel. The default is a 1x4 flat tile.
struct ShuttleFootprint {
  double length = 4 * kStudMm;
  double width = 1 * kStudMm;

  void validate() const {
    detail::require(std::isfinite(length) && length >= 0.0, "shuttle length must be >= 0");
    detail::require(std::isfinite(width) && width >= 0.0, "shuttle width must be >= 0");
  }
};

inline constexpr double kUnboundedChannel = std::numeric_limits<double>::infinity();

/// Mechanism parameters of the trammel.
///
/// The x-channel pivot C and the y-channel pivot D sit `pivot_separation`
/// apart on the rod. The pen is `pen_offset` from D, measured along the rod
/// towards C, so pen_offset < pivot_separation places it between the pivots
/// and pen_offset > pivot_separation places it beyond C.
class TrammelConfig {
 public:
  TrammelConfig(double pivot_separation, double pen_offset, ShuttleFootprint shuttle = {},
                double channel_half_length = kUnboundedChannel)
      : pivot_separation_(pivot_separation),
        pen_offset_(pen_offset),
        shuttle_(shuttle),
        channel_half_length_(channel_half_length) {
    detail::require(std::isfinite(pivot_separation) && pivot_separation > 0.0,
                    "pivot separation must be positive");
    detail::require(std::isfinite(pen_offset) && pen_offset > 0.0, "pen offset must be positive");
    detail::require(pen_offset != pivot_separation,
                    "pen offset equal to pivot separation puts the pen on pivot C "
                    "and degenerates the trace to a segment");
    shuttle.validate();
    detail::require(!std::isnan(channel_half_length) && channel_half_length >= 0.0,
                    "channel half-length must be >= 0");
  }

  double pivot_separation() const noexcept { return pivot_separation_; }
  double pen_offset() const noexcept { return pen_offset_; }
  const ShuttleFootprint& shuttle() const noexcept { return shuttle_; }
  double channel_half_length() const noexcept { return channel_half_length_; }

 private:
  double pivot_separation_;
  double pen_offset_;
  ShuttleFootprint shuttle_;
  double channel_half_length_;
};

struct SemiAxes {
  double along_x;
  double along_y;
};

inline SemiAxes semi_axes(const TrammelConfig& cfg) noexcept {
  return {cfg.pen_offset(), std::abs(cfg.pivot_separation() - cfg.pen_offset())};
}

/// Ellipse traced by the pen, centered at the channel crossing.
inline EllipseSpec traced_ellipse(const TrammelConfig& cfg) {
  const SemiAxes ax = semi_axes(cfg);
  return EllipseSpec(ax.along_x, ax.along_y);
}

struct RodState {
  double theta;    // normalized rod angle
  Point2 pivot_x;  // C, on the x-channel
  Point2 pivot_y;  // D, on the y-channel
  Point2 pen;      // P
};

inline RodState rod_state(const TrammelConfig& cfg, double theta) {
  const double t = normalize_angle(theta);
  const double c = std::cos(t);
  const double s = std::sin(t);
  const double l = cfg.pivot_separation();
  const double p = cfg.pen_offset();
  return RodState{t, Point2{l * c, 0.0}, Point2{0.0, l * s}, Point2{p * c, (l - p) * s}};
}

enum class PenPlacement { Outside, Between };

inline std::string_view to_string(PenPlacement v) noexcept {
  return v == PenPlacement::Outside ? "pen_outside" : "pen_between";
}

/// Mechanism that draws an ellipse with semi-axes `a` (along x) and `b`.
///
/// Outside: pivots |a - b| apart, pen at max(a, b) from D; the longer axis
/// always lies along x. Between: pivots a + b apart, pen at a from D.
inline TrammelConfig design_for_ellipse(double a, double b, PenPlacement placement,
                                        ShuttleFootprint shuttle = {},
                                        double channel_half_length = kUnboundedChannel) {
  detail::require(std::isfinite(a) && a > 0.0 && std::isfinite(b) && b > 0.0,
                  "semi-axes must be positive");
  if (placement == PenPlacement::Outside) {
    detail::require(a != b,
                    "pen_outside needs a != b: equal semi-axes would require zero pivot separation");
    return TrammelConfig(std::abs(a - b), std::max(a, b), shuttle, channel_half_length);
  }
  return TrammelConfig(a + b, a, shuttle, channel_half_length);
}

/// Each pivot sweeps [-l, l]; the channel must also hold half a shuttle.
inline double required_channel_half_length(const TrammelConfig& cfg) noexcept {
  return cfg.pivot_separation() + cfg.shuttle().length / 2.0;
}

}  // namespace ellipsograph
