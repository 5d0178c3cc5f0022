#pragma once

#include <vector>

#include "convexnormals/bodies2d.hpp"

namespace cvxn {

struct EvolutePoint {
  double theta = 0.0;
  double rho = 0.0;
  Point2 boundary_point;
  Point2 center;  // r - rho u
};

std::vector<EvolutePoint> curvature_profile(const SmoothBody2& body, int grid);

struct EvoluteContainment {
  bool contained = false;
  /// max over the grid of the support excess max_phi <c(theta), u(phi)> - h(phi);
  /// negative values are a containment margin.
  double worst_violation = 0.0;
  double worst_theta = 0.0;
  int grid = 0;
};

/// Grid-certified test that every centre of curvature lies in the body.
/// The 4096-point check is repeated on 8192 points when the margin is small.
EvoluteContainment contains_evolute(const SmoothBody2& body);

struct RollingBall {
  double radius = 0.0;  // min rho
  double theta = 0.0;   // where it is attained
  Point2 center;        // c(theta)
};

/// Largest disk rolling freely inside: radius min rho, tangent at the point
/// of maximal curvature.
RollingBall rolling_ball(const SmoothBody2& body);
double rolling_ball_radius(const SmoothBody2& body);

}  // namespace cvxn
