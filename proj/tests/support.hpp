#pragma once

// Generators and brute-force oracles shared by the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "convexnormals/bodies2d.hpp"
#include "convexnormals/rng.hpp"

namespace cvxn::testing {


// Hull of 5..12 jittered points on an ellipse with a random shear.
inline Polygon2 random_polygon(std::uint64_t seed, std::uint64_t index) {
  SampleStream s(seed, index);
  const int m = 5 + static_cast<int>(s.uniform() * 8);
  const double a = s.uniform(0.5, 2.0), shear = s.uniform(-0.5, 0.5);
  std::vector<Point2> pts;
  for (int i = 0; i < m; ++i) {
    const double t = 2 * kPi * (i + s.uniform(-0.3, 0.3)) / m;
    const double r = s.uniform(0.8, 1.2);
    pts.push_back({a * r * std::cos(t) + shear * r * std::sin(t), r * std::sin(t)});
  }
  return build_polygon(pts);
}

// Centrally symmetric 2m-gon from m half-turn directions with random lengths.
inline Polygon2 random_symmetric_polygon(std::uint64_t seed, std::uint64_t index) {
  SampleStream s(seed, index);
  const int m = 2 + static_cast<int>(s.uniform() * 5);
  std::vector<double> angles;
  for (int i = 0; i < m; ++i) angles.push_back(kPi * (i + s.uniform(0.1, 0.9)) / m);
  std::vector<Point2> pts;
  for (int i = 0; i < m; ++i) {
    const double r = s.uniform(0.6, 1.6);
    pts.push_back({r * std::cos(angles[i]), r * std::sin(angles[i])});
    pts.push_back({-r * std::cos(angles[i]), -r * std::sin(angles[i])});
  }
  return build_polygon(pts);
}

// Vertices on the unit circle at the given angles in [0, pi), mirrored.
inline Polygon2 concyclic_symmetric(const std::vector<double>& half_angles) {
  std::vector<Point2> pts;
  for (double t : half_angles) {
    pts.push_back({std::cos(t), std::sin(t)});
    pts.push_back({-std::cos(t), -std::sin(t)});
  }
  return build_polygon(pts);
}

// Smooth Fourier body with small random harmonics 2..deg (convex by construction
// when sum k^2 |c_k| < 1).
inline SmoothBody2 random_fourier(std::uint64_t seed, std::uint64_t index, int deg, double budget) {
  SampleStream s(seed, index);
  std::vector<double> c(deg, 0.0), d(deg, 0.0);
  double used = 0.0;
  std::vector<double> w(deg, 0.0);
  for (int k = 2; k <= deg; ++k) {
    c[k - 1] = s.uniform(-1, 1);
    d[k - 1] = s.uniform(-1, 1);
    used += double(k) * k * (std::abs(c[k - 1]) + std::abs(d[k - 1]));
  }
  const double scale = budget / used;
  for (int k = 2; k <= deg; ++k) c[k - 1] *= scale, d[k - 1] *= scale;
  return SmoothBody2::create(1.0, c, d);
}

// Number of local extrema of |p - r(t)|^2 over a dense boundary
// parametrisation of a Fourier body, counted by sign changes of its derivative.
inline int brute_smooth_normals(const SmoothBody2& b, Point2 p, int grid = 200000) {
  auto f = [&](double t) {
    const SupportJet j = b.jet(t);
    // d/dt |r - p|^2 / 2 = <r - p, r'> with r' = rho * u_perp.
    const Point2 r = b.point(t);
    return j.rho() * ((r.x - p.x) * -std::sin(t) + (r.y - p.y) * std::cos(t));
  };
  int count = 0;
  double prev = f(0.0);
  for (int i = 1; i <= grid; ++i) {
    const double cur = f(2 * kPi * i / grid);
    if ((prev < 0) != (cur < 0)) ++count;
    prev = cur;
  }
  return count;
}

// Wedge-free count for polygons: foot of the perpendicular strictly inside an
// edge, plus vertices where the distance has a strict local maximum.
inline int brute_polygon_normals(const Polygon2& poly, Point2 p) {
  int count = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e = poly.edge(i);
    const double t = dot(p - poly.vertex(i), e) / dot(e, e);
    if (t > 0 && t < 1) ++count;
    const Vec2 d = poly.vertex(i) - p;
    if (dot(d, poly.edge(i + n - 1)) > 0 && dot(d, e) < 0) ++count;
  }
  return count;
}

}  // namespace cvxn::testing
