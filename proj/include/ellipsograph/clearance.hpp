#pragma once

#include <cmath>
#include <functional>
#include <string_view>
#include <utility>
#include <vector>

#include "ellipsograph/geometry.hpp"
#include "ellipsograph/trammel.hpp"

namespace ellipsograph {

/// Closed axis-aligned rectangle.
struct Rect {
  double min_x;
  double max_x;
  double min_y;
  double max_y;
};

/// Shuttle boxes at rod angle theta: first rides the x-channel, second the
/// y-channel. Each box is long along its own channel.
inline std::pair<Rect, Rect> shuttle_rects(const TrammelConfig& cfg, double theta) {
  const double hl = cfg.shuttle().length / 2.0;
  const double hw = cfg.shuttle().width / 2.0;
  const double xc = cfg.pivot_separation() * std::cos(theta);
  const double yd = cfg.pivot_separation() * std::sin(theta);
  return {Rect{xc - hl, xc + hl, -hw, hw}, Rect{-hw, hw, yd - hl, yd + hl}};
}

/// Touching shuttles count as colliding.
inline bool collides(const TrammelConfig& cfg, double theta) noexcept {
  const double reach = (cfg.shuttle().length + cfg.shuttle().width) / 2.0;
  const double l = cfg.pivot_separation();
  return std::abs(l * std::cos(theta)) <= reach && std::abs(l * std::sin(theta)) <= reach;
}

/// A shuttle sticks out past the end of its channel.
inline bool overruns(const TrammelConfig& cfg, double theta) noexcept {
  const double limit = cfg.channel_half_length() - cfg.shuttle().length / 2.0;
  const double l = cfg.pivot_separation();
  return std::abs(l * std::cos(theta)) > limit || std::abs(l * std::sin(theta)) > limit;
}

enum class BlockCause { Collision, Overrun, CollisionAndOverrun };

inline std::string_view to_string(BlockCause c) noexcept {
  switch (c) {
    case BlockCause::Collision: return "collision";
    case BlockCause::Overrun: return "overrun";
    case BlockCause::CollisionAndOverrun: return "collision+overrun";
  }
  return "?";
}

/// One maximal forbidden arc. When the arc wraps through angle 0, lo > hi
/// and the arc is [lo, 2pi] + [0, hi].
struct ForbiddenArc {
  double lo;
  double hi;
  BlockCause cause;

  bool wraps() const noexcept { return lo > hi; }
  double width() const noexcept { return wraps() ? hi - lo + kTwoPi : hi - lo; }
};

struct ClearanceReport {
  AngleSet forbidden;
  double drawable_fraction = 1.0;
  std::vector<ForbiddenArc> arcs;
};

inline constexpr int kClearanceGrid = 4096;

/// Set of angles where `blocked` holds, from a uniform scan followed by
/// bisection of every sign change down to `tol`. Each refined boundary is
/// the free-side end of its bracket, so the result covers the true set.
/// Blocked runs narrower than the grid spacing can be missed.
inline AngleSet scan_blocked(const std::function<bool(double)>& blocked, double tol,
                             int grid = kClearanceGrid) {
  detail::require(tol > 0.0, "scan tolerance must be positive");
  detail::require(grid >= 4, "scan grid too coarse");
  const double step = kTwoPi / grid;
  std::vector<char> v(static_cast<std::size_t>(grid));
  for (int k = 0; k < grid; ++k) v[k] = blocked(k * step);

  auto refine = [&](double free_t, double blocked_t) {
    while (std::abs(blocked_t - free_t) > tol) {
      const double mid = 0.5 * (free_t + blocked_t);
      if (blocked(mid)) blocked_t = mid; else free_t = mid;
    }
    return free_t;
  };

  // Entries are free->blocked transitions, exits blocked->free, walking up.
  std::vector<double> entries;
  std::vector<double> exits;
  for (int k = 0; k < grid; ++k) {
    const bool a = v[k];
    const bool b = v[(k + 1) % grid];
    const double ta = k * step;
    const double tb = (k + 1) * step;
    if (!a && b) entries.push_back(refine(ta, tb));
    if (a && !b) exits.push_back(refine(tb, ta));
  }
  if (entries.empty()) return v[0] ? AngleSet::full() : AngleSet::empty();

  // Pair each entry with the next exit going counter-clockwise.
  AngleSet out;
  const bool start_blocked = v[0];
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::size_t j = start_blocked ? (i + 1) % exits.size() : i;
    double lo = entries[i];
    double hi = exits[j];
    if (hi < lo) hi += kTwoPi;
    out = out.unite(AngleSet::from_arc(lo, std::min(hi, lo + kTwoPi)));
  }
  return out;
}

/// Maximal arcs of a set, re-joining the two pieces of an arc through 0.
inline std::vector<Arc> circular_arcs(const AngleSet& s) {
  std::vector<Arc> arcs = s.arcs();
  if (arcs.size() >= 2 && arcs.front().lo == 0.0 && arcs.back().hi == kTwoPi) {
    arcs.front().lo = arcs.back().lo;  // lo > hi marks the wrap
    arcs.pop_back();
  }
  return arcs;
}

inline ClearanceReport forbidden_arcs(const TrammelConfig& cfg, double tol) {
  detail::require(tol > 0.0, "clearance tolerance must be positive");
  const AngleSet collision = scan_blocked([&](double t) { return collides(cfg, t); }, tol);
  const AngleSet overrun = scan_blocked([&](double t) { return overruns(cfg, t); }, tol);

  ClearanceReport report;
  report.forbidden = collision.unite(overrun);
  report.drawable_fraction = 1.0 - report.forbidden.measure() / kTwoPi;

  auto touches = [](const AngleSet& cause, const Arc& arc) {
    const AngleSet piece = arc.lo <= arc.hi ? AngleSet::from_arcs({arc})
                                            : AngleSet::from_arc(arc.lo, arc.hi + kTwoPi);
    return !cause.intersect(piece).is_empty();
  };
  for (const Arc& arc : circular_arcs(report.forbidden)) {
    const bool c = touches(collision, arc);
    const bool o = touches(overrun, arc);
    const BlockCause cause = c && o ? BlockCause::CollisionAndOverrun
                             : o    ? BlockCause::Overrun
                                    : BlockCause::Collision;
    report.arcs.push_back({arc.lo, arc.hi, cause});
  }
  return report;
}

/// Angles at which the pen can draw.
inline AngleSet drawable_trace_domain(const TrammelConfig& cfg, double tol) {
  return forbidden_arcs(cfg, tol).forbidden.complement();
}

}  // namespace ellipsograph
