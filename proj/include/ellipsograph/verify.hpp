#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "ellipsograph/clearance.hpp"
#include "ellipsograph/export.hpp"
#include "ellipsograph/run_config.hpp"
#include "ellipsograph/solver.hpp"
#include "ellipsograph/trammel.hpp"

namespace ellipsograph {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

inline constexpr int kVerifyGrid = 10000;
inline constexpr int kVerifySweepSteps = 720;
inline constexpr int kVerifyMaxNewtonSteps = 6;

/// Worst row-wise relative error: for each residual, the largest entry
/// difference of its gradient over that gradient's max-norm (floored at 1).
inline double jacobian_relative_error(const Matrix2& analytic, const Matrix2& numeric) {
  double worst = 0.0;
  for (int r = 0; r < 2; ++r) {
    const double scale = std::max({std::abs(analytic[r][0]), std::abs(analytic[r][1]), 1.0});
    const double err = std::max(std::abs(analytic[r][0] - numeric[r][0]),
                                std::abs(analytic[r][1] - numeric[r][1]));
    worst = std::max(worst, err / scale);
  }
  return worst;
}

/// Runs every consistency check on a configuration.
inline std::vector<CheckResult> run_checks(const RunConfig& rc) {
  const TrammelConfig cfg = rc.trammel();
  const EllipseSpec ellipse = traced_ellipse(cfg);
  const Tolerances& tol = rc.tolerances;
  const double l = cfg.pivot_separation();
  std::vector<CheckResult> out;

  auto fmt = [](double v) {
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << v;
    return s.str();
  };

  const AngleSet domain = drawable_trace_domain(cfg, tol.angle_tol);
  const Trace trace = sample_trace(cfg, domain, rc.max_chord_mm);

  std::vector<Point2> pens;
  for (int k = 0; k < kVerifyGrid; ++k) pens.push_back(rod_state(cfg, kTwoPi * k / kVerifyGrid).pen);
  for (const auto& line : trace.polylines) {
    for (const auto& s : line) pens.push_back(s.pen);
  }

  {
    double worst = 0.0;
    for (Point2 p : pens) worst = std::max(worst, std::abs(implicit_residual(ellipse, p)));
    out.push_back({"implicit-residual", worst <= tol.residual_tol,
                   "max |residual| " + fmt(worst) + " (limit " + fmt(tol.residual_tol) + ")"});
  }
  {
    const double expected = 2.0 * ellipse.major();
    double worst = 0.0;
    for (Point2 p : pens) worst = std::max(worst, std::abs(focal_sum(ellipse, p) - expected));
    out.push_back({"focal-sum", worst <= tol.solver_tol,
                   "focal sum vs " + fmt(expected) + " mm, max error " + fmt(worst) + " mm (limit " +
                       fmt(tol.solver_tol) + ")"});
  }
  {
    double worst_len = 0.0;
    double worst_cross = 0.0;
    for (int k = 0; k < kVerifyGrid; ++k) {
      const RodState st = rod_state(cfg, kTwoPi * k / kVerifyGrid);
      worst_len = std::max(worst_len, std::abs(distance(st.pivot_x, st.pivot_y) - l) / l);
      worst_cross = std::max(worst_cross, std::abs(cross(st.pivot_y, st.pivot_x, st.pen)));
    }
    const bool ok = worst_len <= tol.residual_tol && worst_cross <= tol.solver_tol;
    out.push_back({"rod-rigidity", ok,
                   "rod length rel. error " + fmt(worst_len) + ", collinearity " + fmt(worst_cross) +
                       " mm^2"});
  }
  {
    try {
      const auto pts = sweep(l, 0.0, kTwoPi, kVerifySweepSteps, rc.solver);
      double worst = 0.0;
      int iters = 0;
      for (const auto& p : pts) {
        const ConstraintState s = p.result.state;
        worst = std::max({worst, std::abs(s.x_c - l * std::cos(p.theta)),
                          std::abs(s.y_d - l * std::sin(p.theta))});
        iters = std::max(iters, p.result.iterations);
      }
      const bool ok = worst <= tol.solver_tol && iters <= kVerifyMaxNewtonSteps;
      out.push_back({"solver-sweep", ok,
                     std::to_string(kVerifySweepSteps) + " steps, max pivot error " + fmt(worst) +
                         " mm, max Newton iterations " + std::to_string(iters)});
    } catch (const Error& e) {
      out.push_back({"solver-sweep", false, e.what()});
    }
  }
  {
    double worst = 0.0;
    for (int k = 0; k < kVerifySweepSteps; ++k) {
      const double t = kTwoPi * k / kVerifySweepSteps;
      const ConstraintState s{l * std::cos(t), l * std::sin(t)};
      worst = std::max(worst, jacobian_relative_error(
                                  jacobian(l, t, s), central_difference_jacobian(l, t, s, rc.solver.fd_step)));
    }
    out.push_back({"jacobian-fd", worst < 1e-6, "max relative error vs central differences " + fmt(worst)});
  }
  {
    double worst = 0.0;
    for (const auto& line : trace.polylines) {
      for (std::size_t i = 1; i < line.size(); ++i) {
        worst = std::max(worst, distance(line[i - 1].pen, line[i].pen));
      }
    }
    out.push_back({"trace-chord", worst <= rc.max_chord_mm,
                   std::to_string(trace.point_count()) + " points, longest chord " + fmt(worst) +
                       " mm (limit " + fmt(rc.max_chord_mm) + ")"});
  }
  {
    const bool ok = fits_page(ellipse, rc.page());
    std::ostringstream d;
    d << 2 * ellipse.semi_x() << " x " << 2 * ellipse.semi_y() << " mm on " << rc.page_width_mm
      << " x " << rc.page_height_mm << " mm, margin " << rc.margin_mm << " mm";
    out.push_back({"page-fit", ok, d.str()});
  }
  return out;
}

}  // namespace ellipsograph
