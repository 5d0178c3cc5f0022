#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "convexnormals/rng.hpp"
#include "convexnormals/vec.hpp"

namespace cvxn {

/// Convex polygon with counterclockwise, strictly convex vertex sequence.
class Polygon2 {
 public:
  /// Convex hull of `points`; collinear and repeated points are dropped.
  /// Throws GeometryError(DegenerateBody) when fewer than 3 hull vertices remain.
  static Polygon2 from_points(std::span<const Point2> points);

  /// Takes an already counterclockwise vertex list and validates strict
  /// convexity (cross products > 1e-12 * scale^2).
  static Polygon2 from_ccw(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Point2 vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  Vec2 edge(std::size_t i) const { return vertex(i + 1) - vertex(i); }
  /// Unit inward normal of edge i (left of the edge direction).
  Vec2 inward_normal(std::size_t i) const { return unit(perp(edge(i))); }

  Polygon2 transformed(double a, double b, double c, double d, Vec2 shift = {}) const;

 private:
  explicit Polygon2(std::vector<Point2> v) : vertices_(std::move(v)) {}
  std::vector<Point2> vertices_;
};

/// Value and first two derivatives of a support function at one angle.
struct SupportJet {
  double h = 0.0;
  double dh = 0.0;
  double d2h = 0.0;
  double rho() const { return h + d2h; }
};

/// Precomputed support-function samples on a uniform angular grid.
struct SupportGrid {
  int size = 0;
  double step = 0.0;
  std::vector<double> cos_t, sin_t, h, dh, d2h;
};

/// Planar body whose support function is the finite Fourier series
/// h(t) = a0 + sum_k (a_k cos kt + b_k sin kt).
class SmoothBody2 {
 public:
  static constexpr int kCheckGrid = 4096;
  /// Coarse grid for certified fast paths (root counts, support margins).
  static constexpr int kCoarseGrid = 256;
  static constexpr double kMinRho = 1e-9;

  /// Validates rho = h + h'' > 1e-9 on the check grid; throws Convexity
  /// naming the angle of minimal rho otherwise.
  static SmoothBody2 create(double a0, std::vector<double> cos_coeffs,
                            std::vector<double> sin_coeffs);
  static SmoothBody2 disk(double radius, Point2 center = {});

  double a0() const { return a0_; }
  const std::vector<double>& cos_coeffs() const { return cos_; }
  const std::vector<double>& sin_coeffs() const { return sin_; }
  int degree() const { return static_cast<int>(cos_.size()); }

  SupportJet jet(double theta) const;
  /// Third derivative h'''(theta); used for derivative bounds and evolute tangents.
  double d3h(double theta) const;
  double h(double theta) const { return jet(theta).h; }
  double rho(double theta) const { return jet(theta).rho(); }
  /// Boundary point with outer normal angle theta: h u + h' u_perp.
  Point2 point(double theta) const;
  /// Centre of curvature r(theta) - rho(theta) u(theta).
  Point2 centre_of_curvature(double theta) const;

  /// Samples on the 4096-point check grid (shared, immutable).
  const SupportGrid& grid() const { return *grid_; }
  const SupportGrid& coarse_grid() const { return *coarse_; }
  /// Samples on an arbitrary uniform grid (computed on demand).
  SupportGrid make_grid(int size) const;

  double min_rho() const { return min_rho_; }
  double min_rho_angle() const { return min_rho_angle_; }
  /// Sum_k k^3 (|a_k| + |b_k|): bound on |h'''|.
  double third_derivative_bound() const { return d3_bound_; }
  /// |a0| + Sum_k k^2 (|a_k| + |b_k|): bound on |h| + |h''|.
  double second_derivative_bound() const { return d2_bound_; }

  /// Radii of origin-centred disks certified inside (0 when the origin is not
  /// well inside) and containing the body.
  double inner_disk_radius() const { return inner_disk_; }
  double outer_disk_radius() const { return outer_disk_; }

  /// min over theta of h(theta) - <p, u(theta)>: positive inside, negative outside.
  double support_margin(Point2 p) const;

  /// Body with support function h + t (t may be negative).
  SmoothBody2 offset(double t) const;
  SmoothBody2 scaled(double lambda) const;

 private:
  SmoothBody2() = default;
  double a0_ = 0.0;
  std::vector<double> cos_, sin_;
  std::shared_ptr<const SupportGrid> grid_;
  std::shared_ptr<const SupportGrid> coarse_;
  double min_rho_ = 0.0;
  double min_rho_angle_ = 0.0;
  double d3_bound_ = 0.0;
  double d2_bound_ = 0.0;
  double inner_disk_ = 0.0;
  double outer_disk_ = 0.0;
};

/// Circular arc of the boundary; normal angles run counterclockwise from
/// `start` over `span` radians, the boundary point at normal angle t being
/// center + radius * u(t).
struct Arc {
  Point2 center;
  double radius = 1.0;
  double start = 0.0;
  double span = 0.0;

  Point2 point_at(double t) const { return center + radius * polar(t); }
  Point2 first() const { return point_at(start); }
  Point2 last() const { return point_at(start + span); }
  double length() const { return radius * span; }
};

/// Junction between two arcs whose outer normal cone has positive angle.
struct Corner {
  Point2 vertex;
  double cone_start = 0.0;  // outer normal angle at the end of the incoming arc
  double cone_span = 0.0;
  std::size_t incoming_arc = 0;
};

/// Convex body bounded by circular arcs chained head to tail.
class ArcBody2 {
 public:
  static ArcBody2 create(std::vector<Arc> arcs);

  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Corner>& corners() const { return corners_; }
  /// Support function, exact.
  double support(double theta) const;
  /// Support point with outer normal angle theta.
  Point2 support_point(double theta) const;
  /// Constant width of the body, if it has one (within 1e-12 relative).
  bool constant_width(double* width) const;

 private:
  ArcBody2() = default;
  std::vector<Arc> arcs_;
  std::vector<Corner> corners_;
};

using Body2 = std::variant<Polygon2, SmoothBody2, ArcBody2>;

struct SupportFit {
  SmoothBody2 body;
  double max_residual = 0.0;
  double rms_residual = 0.0;
};

struct Measure2 {
  double area = 0.0;
  double perimeter = 0.0;
};

struct BoundarySample {
  Point2 point;
  double normal_angle = 0.0;  // outer normal angle
  std::size_t piece = 0;      // edge / arc index (0 for smooth bodies)
};

struct BBox2 {
  double xmin, xmax, ymin, ymax;
};

Polygon2 build_polygon(std::span<const Point2> points);
SupportFit fit_support_body(std::span<const std::pair<double, double>> samples, int degree);
ArcBody2 build_reuleaux(int sides, double width);
/// Least-squares Fourier fit of the ellipse x^2/a^2 + y^2/b^2 <= 1
/// (support sqrt(a^2 cos^2 + b^2 sin^2)) on 512 angles.
SupportFit fit_ellipse(double a, double b, int degree = 24);

Measure2 measure2d(const Body2& body);
bool contains2(const Body2& body, Point2 p, double tol = 1e-12);
std::vector<Point2> sample_interior2(const Body2& body, std::size_t n, std::uint64_t seed);
std::vector<BoundarySample> sample_boundary2(const Body2& body, std::size_t n, std::uint64_t seed);
double difference_body_area(const Body2& body);

/// Support function of any planar body.
double support2(const Body2& body, double theta);
BBox2 bounding_box(const Body2& body);
Point2 centroid2(const Body2& body);
/// Distance from the centroid to the boundary; the length scale used for
/// tolerances and boundary offsets.
double inner_radius(const Body2& body);
/// Characteristic size (half the mean width).
double body_scale(const Body2& body);

/// One uniform draw from the body, consuming variates from `stream`.
template <class Stream>
Point2 draw_interior(const Body2& body, const BBox2& box, Stream& stream) {
  for (;;) {
    Point2 p{stream.uniform(box.xmin, box.xmax), stream.uniform(box.ymin, box.ymax)};
    if (contains2(body, p)) return p;
  }
}

/// One arc-length-uniform boundary draw.
BoundarySample draw_boundary2(const Body2& body, SampleStream& stream);

/// Arc length from normal angle 0 to `theta` along a Fourier body, and its inverse.
double smooth_arc_length_at(const SmoothBody2& body, double theta);
double smooth_angle_at_arc_length(const SmoothBody2& body, double s);

/// Polygon area by the shoelace formula (vertices in order).
double shoelace_area(std::span<const Point2> vertices);
/// Minkowski sum of two convex polygons.
std::vector<Point2> minkowski_sum(const Polygon2& a, const Polygon2& b);

}  // namespace cvxn
