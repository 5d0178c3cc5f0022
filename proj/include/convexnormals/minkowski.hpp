#pragma once

#include <optional>

#include "convexnormals/bodies2d.hpp"
#include "convexnormals/normals.hpp"

namespace cvxn {

/// Unit ball of a normed plane: centrally symmetric about the origin.
class NormBall2 {
 public:
  /// Accepts a SmoothBody2 (h(t) = h(t + pi) within 1e-10) or a Polygon2
  /// (vertex set symmetric under negation). Throws Domain otherwise.
  static NormBall2 create(Body2 body);

  const Body2& body() const { return body_; }
  bool smooth() const { return std::holds_alternative<SmoothBody2>(body_); }
  const SmoothBody2& smooth_body() const;
  double area() const { return area_; }

  /// Minkowski gauge ||x||_M.
  double gauge(Vec2 x) const;
  /// Boundary point at parameter s in [0, 1): outer normal angle 2 pi s for
  /// smooth balls, perimeter fraction for polygons.
  Point2 boundary(double s) const;

 private:
  explicit NormBall2(Body2 b) : body_(std::move(b)) {}
  Body2 body_;
  double area_ = 0.0;
};

/// Direction of the boundary point of M whose tangent is parallel to phi.
Vec2 birkhoff_direction(const NormBall2& M, double phi);

/// n_M(K, p): roots of cross(p - r_K(t), r_M(t)) over t in [0, 2 pi).
NormalCount count_minkowski_normals(const NormBall2& M, const SmoothBody2& K, Point2 p,
                                    bool check_inside = true);

struct HexagonSearch {
  double tau = 0.0;
  Point2 u, v;  // hexagon vertices are +-u, +-v, +-(v - u)
  double hexagon_area = 0.0;
};

HexagonSearch largest_affine_hexagon(const NormBall2& M);
double hexagon_ratio_tau(const NormBall2& M);
/// 6 / (3 - 2 tau(M)).
double normed_width_bound(const NormBall2& M);

}  // namespace cvxn
