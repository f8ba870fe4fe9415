#pragma once

#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "ellipsograph/error.hpp"
#include "ellipsograph/geometry.hpp"

// Numeric model of the trammel as a constraint system. Unknowns are the
// channel coordinates of the two pivots; the rod angle drives the motion.
//
//   g1 = x_C^2 + y_D^2 - l^2          rigid rod
//   g2 = y_D cos(theta) - x_C sin(theta)   rod direction follows theta
//
// det J = 2 (x_C cos + y_D sin) = 2l at every solution, so continuation in
// theta never meets a singular configuration.

namespace ellipsograph {

struct ConstraintState {
  double x_c = 0.0;  // x-pivot position along the x-channel
  double y_d = 0.0;  // y-pivot position along the y-channel
};

struct SolverConfig {
  double tol = 1e-9;  // mm
  int max_iter = 25;
  double fd_step = 1e-6;  // mm

  void validate() const {
    detail::require(tol > 0.0, "solver tol must be positive");
    detail::require(max_iter >= 1, "solver max_iter must be >= 1");
    detail::require(fd_step > 0.0, "solver fd_step must be positive");
  }
};

struct Residuals {
  double g1;  // mm^2
  double g2;  // mm
};

using Matrix2 = std::array<std::array<double, 2>, 2>;

inline Residuals residuals(double l, double theta, ConstraintState st) noexcept {
  return {st.x_c * st.x_c + st.y_d * st.y_d - l * l,
          st.y_d * std::cos(theta) - st.x_c * std::sin(theta)};
}

inline Matrix2 jacobian(double /*l*/, double theta, ConstraintState st) noexcept {
  return {{{2.0 * st.x_c, 2.0 * st.y_d}, {-std::sin(theta), std::cos(theta)}}};
}

inline double determinant(const Matrix2& m) noexcept { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

/// Central-difference approximation of the Jacobian, built only from
/// residuals().
inline Matrix2 central_difference_jacobian(double l, double theta, ConstraintState st, double h) {
  Matrix2 j{};
  for (int col = 0; col < 2; ++col) {
    ConstraintState plus = st;
    ConstraintState minus = st;
    (col == 0 ? plus.x_c : plus.y_d) += h;
    (col == 0 ? minus.x_c : minus.y_d) -= h;
    const Residuals rp = residuals(l, theta, plus);
    const Residuals rm = residuals(l, theta, minus);
    j[0][col] = (rp.g1 - rm.g1) / (2.0 * h);
    j[1][col] = (rp.g2 - rm.g2) / (2.0 * h);
  }
  return j;
}

struct SolveResult {
  ConstraintState state;
  int iterations;  // Newton updates applied
  Residuals final_residuals;
};

inline bool converged(double l, Residuals r, double tol) noexcept {
  return std::abs(r.g1) <= tol * l && std::abs(r.g2) <= tol;
}

/// Plain Newton-Raphson at a fixed rod angle. The branch reached is the one
/// the guess lies closest to; the solver never re-seeds.
inline SolveResult solve_at(double l, double theta, ConstraintState guess,
                            const SolverConfig& cfg = {}) {
  detail::require(std::isfinite(l) && l > 0.0, "pivot separation must be positive");
  cfg.validate();
  ConstraintState st = guess;
  for (int k = 0;; ++k) {
    const Residuals r = residuals(l, theta, st);
    if (!std::isfinite(r.g1) || !std::isfinite(r.g2)) {
      throw NonConvergence("Newton iteration diverged", r.g1, r.g2, k);
    }
    if (converged(l, r, cfg.tol)) return {st, k, r};
    if (k == cfg.max_iter) {
      std::ostringstream msg;
      msg << "Newton did not converge in " << cfg.max_iter << " iterations (g1=" << r.g1
          << ", g2=" << r.g2 << ")";
      throw NonConvergence(msg.str(), r.g1, r.g2, k);
    }
    const Matrix2 j = jacobian(l, theta, st);
    const double det = determinant(j);
    if (std::abs(det) < 1e-14 * l) {
      std::ostringstream msg;
      msg << "singular Jacobian (det=" << det << ")";
      throw SingularJacobian(msg.str(), det);
    }
    // Cramer's rule for J * delta = r.
    const double dx = (r.g1 * j[1][1] - j[0][1] * r.g2) / det;
    const double dy = (j[0][0] * r.g2 - j[1][0] * r.g1) / det;
    st.x_c -= dx;
    st.y_d -= dy;
  }
}

struct SweepPoint {
  double theta;
  SolveResult result;
};

/// Continuation over n_steps angles theta_k = start + k (end - start) / n_steps,
/// k = 0 .. n_steps-1. The first guess is the closed-form pivot pair at
/// `start`; every later solve starts from the previous solution.
inline std::vector<SweepPoint> sweep(double l, double theta_start, double theta_end, int n_steps,
                                     const SolverConfig& cfg = {}) {
  detail::require(n_steps >= 1, "sweep needs n_steps >= 1");
  const double step = (theta_end - theta_start) / n_steps;
  std::vector<SweepPoint> out;
  out.reserve(static_cast<std::size_t>(n_steps));
  ConstraintState guess{l * std::cos(theta_start), l * std::sin(theta_start)};
  for (int k = 0; k < n_steps; ++k) {
    const double theta = theta_start + k * step;
    try {
      SolveResult r = solve_at(l, theta, guess, cfg);
      guess = r.state;
      out.push_back({theta, r});
    } catch (const NonConvergence& e) {
      std::ostringstream msg;
      msg << e.what() << " at theta=" << theta;
      throw NonConvergence(msg.str(), e.rod_length_residual(), e.direction_residual(),
                           e.iterations(), theta);
    } catch (const SingularJacobian& e) {
      std::ostringstream msg;
      msg << e.what() << " at theta=" << theta;
      throw SingularJacobian(msg.str(), e.determinant(), theta);
    }
  }
  return out;
}

}  // namespace ellipsograph
