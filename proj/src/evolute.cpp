#include "convexnormals/evolute.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cvxn {

std::vector<EvolutePoint> curvature_profile(const SmoothBody2& body, int grid) {
  std::vector<EvolutePoint> out(grid);
  for (int j = 0; j < grid; ++j) {
    const double t = kTwoPi * j / grid;
    const SupportJet jt = body.jet(t);
    const Vec2 u = polar(t);
    const Point2 r = jt.h * u + jt.dh * perp(u);
    out[j] = {t, jt.rho(), r, r - jt.rho() * u};
  }
  return out;
}

namespace {

EvoluteContainment check(const SmoothBody2& body, int grid) {
  EvoluteContainment c;
  c.grid = grid;
  c.worst_violation = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < grid; ++j) {
    const double t = kTwoPi * j / grid;
    const double excess = -body.support_margin(body.centre_of_curvature(t));
    if (excess > c.worst_violation) {
      c.worst_violation = excess;
      c.worst_theta = t;
    }
  }
  c.contained = c.worst_violation <= 1e-12 * body.a0();
  return c;
}

}  // namespace

EvoluteContainment contains_evolute(const SmoothBody2& body) {
  EvoluteContainment c = check(body, SmoothBody2::kCheckGrid);
  if (std::abs(c.worst_violation) < 1e-3 * body.a0()) c = check(body, 2 * SmoothBody2::kCheckGrid);
  return c;
}

RollingBall rolling_ball(const SmoothBody2& body) {
  const double step = kTwoPi / SmoothBody2::kCheckGrid;
  double lo = body.min_rho_angle() - step, hi = body.min_rho_angle() + step;
  constexpr double kGold = 0.6180339887498949;
  double x1 = hi - kGold * (hi - lo), x2 = lo + kGold * (hi - lo);
  double f1 = body.rho(x1), f2 = body.rho(x2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - kGold * (hi - lo); f1 = body.rho(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + kGold * (hi - lo); f2 = body.rho(x2);
    }
  }
  double t = 0.5 * (lo + hi);
  double r = body.rho(t);
  if (body.min_rho() < r) {
    r = body.min_rho();
    t = body.min_rho_angle();
  }
  return {r, wrap_angle(t), body.centre_of_curvature(t)};
}

double rolling_ball_radius(const SmoothBody2& body) { return rolling_ball(body).radius; }

}  // namespace cvxn
