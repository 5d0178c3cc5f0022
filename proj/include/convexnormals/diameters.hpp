#pragma once

#include <cstddef>
#include <vector>

#include "convexnormals/bodies2d.hpp"

namespace cvxn {

/// Affine diameter of a strictly convex smooth body making angle
/// `direction_angle` with the horizontal; its length is D(theta).
struct DiameterChord {
  Point2 a, b;
  double direction_angle = 0.0;
  double length = 0.0;
  double normal_angle = 0.0;  // outer normal angle of the supporting line at a
};

DiameterChord diameter_chord(const SmoothBody2& body, double theta);

struct DiameterCount {
  int count = 0;
  bool degenerate = false;  // p on a tangential root or on a triangle boundary
  bool infinite = false;    // p sees a continuum of diameters
  // For polygons with infinite count: the parallel edge pair responsible.
  std::size_t edge_a = 0, edge_b = 0;
};

/// d(K, p): roots of cross(p - r(phi), r(phi + pi) - r(phi)) over [0, 2 pi),
/// halved (the function is antiperiodic). Throws Domain when p is not inside.
DiameterCount count_diameters_smooth(const SmoothBody2& body, Point2 p, bool check_inside = true);

/// Sum over antipodal vertex-edge pairs (v, E) of [p in conv(v, E)]; infinite
/// when p is interior to conv(E, E') for a parallel edge pair.
DiameterCount count_diameters_polygon(const Polygon2& poly, Point2 p, bool check_inside = true);

/// Antipodal structure of a polygon.
struct AntipodalPair {
  std::size_t vertex = 0;  // vertex index (vertex-edge pairs)
  std::size_t edge = 0;    // edge index
  bool parallel = false;   // edge-edge pair: `vertex` holds the other edge
};
std::vector<AntipodalPair> antipodal_pairs(const Polygon2& poly);

struct ThetaSweepRow {
  double theta = 0.0;
  double length = 0.0;
};
/// D(theta) on a uniform grid of [0, 2 pi).
std::vector<ThetaSweepRow> theta_sweep(const SmoothBody2& body, int grid);
/// 1/2 int_0^{2 pi} D(theta)^2 d theta by the trapezoid rule on `grid` nodes.
double half_square_integral(const SmoothBody2& body, int grid);

}  // namespace cvxn
