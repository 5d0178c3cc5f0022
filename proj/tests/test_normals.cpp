#include <cmath>
#include <vector>

#include "convexnormals/bodies3d.hpp"
#include "convexnormals/errors.hpp"
#include "convexnormals/normals.hpp"
#include "doctest.h"

using namespace cvxn;

namespace {
// Brute-force oracle: sign changes of the derivative of |p - r(t)|^2 on a
// dense boundary parametrisation of a polygon (piecewise linear).
int brute_polygon(const Polygon2& poly, Point2 p) {
  int count = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e = poly.edge(i);
    const double t = dot(p - poly.vertex(i), e) / dot(e, e);
    if (t > 0 && t < 1) ++count;
    // Distance has a strict local maximum at the vertex: it decreases
    // along both incident edges.
    const Vec2 d = poly.vertex(i) - p;
    if (dot(d, poly.edge(i + n - 1)) > 0 && dot(d, e) < 0) ++count;
  }
  return count;
}
}  // namespace

TEST_CASE("rectangles see all eight faces") {
  const std::vector<Point2> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const Body2 sq = build_polygon(pts);
  const NormalCount c = classify_normals2(sq, {0.5, 0.5});
  CHECK(c.stable == 4);
  CHECK(c.unstable == 4);
  CHECK(c.degenerate == 0);
  const NormalCount near = classify_normals2(sq, {0.1, 0.2});
  CHECK(near.total() == 8);
  CHECK(stable_count(sq, {0.1, 0.2}) == 4);
}

TEST_CASE("polygon counts match a brute-force oracle") {
  const std::vector<Point2> pts{{0, 0}, {3, 0}, {4, 1.5}, {2, 3}, {-0.5, 1.8}};
  const Polygon2 poly = build_polygon(pts);
  const auto samples = sample_interior2(poly, 2000, 7);
  for (const auto& p : samples) CHECK(count_normals2(poly, p) == brute_polygon(poly, p));
}

TEST_CASE("disk") {
  const Body2 d = SmoothBody2::disk(1.0);
  CHECK(count_normals2(d, {0.3, 0.1}) == 2);
  CHECK(stable_count(d, {0.3, 0.1}) == 1);
  CHECK(classify_normals2(d, {0.0, 0.0}).infinite);
  CHECK_THROWS_AS(count_normals2(d, {0.0, 0.0}), GeometryError);
  CHECK_THROWS_AS(count_normals2(d, {2.0, 0.0}), GeometryError);
}

TEST_CASE("ellipse normals: four inside the evolute, two outside") {
  // h^2 = a^2 cos^2 + b^2 sin^2 is not a trig polynomial; use a nearby Fourier body
  // and check against a dense brute-force scan of the root function.
  const SmoothBody2 b = SmoothBody2::create(1.0, {0.0, 0.15}, {});
  auto brute = [&](Point2 p) {
    const int n = 200000;
    int changes = 0;
    double prev = 0.0;
    for (int j = 0; j <= n; ++j) {
      const double t = kTwoPi * j / n;
      const double g = -p.x * std::sin(t) + p.y * std::cos(t) - b.jet(t).dh;
      if (j > 0 && (g > 0) != (prev > 0)) ++changes;
      prev = g;
    }
    return changes;
  };
  for (Point2 p : {Point2{0.0, 0.0}, Point2{0.05, 0.02}, Point2{0.5, 0.1}, Point2{0.1, 0.6}}) {
    CHECK(count_normals2(b, p) == brute(p));
  }
  CHECK(count_normals2(b, {0.0, 0.01}) == 4);
  const auto feet = normal_feet2(b, {0.02, 0.01});
  for (const auto& f : feet) {
    const Vec2 u = polar(f.theta);
    CHECK(std::abs(cross(u, Point2{0.02, 0.01} - f.foot)) < 1e-9);
    CHECK(f.chord_length > 0.0);
  }
}

TEST_CASE("reuleaux triangle") {
  const ArcBody2 r = build_reuleaux(3, 1.0);
  const Body2 body = r;
  const Point2 c = centroid2(body);
  const NormalCount nc = classify_normals2(body, c);
  CHECK(nc.stable == 3);
  CHECK(nc.unstable == 3);
  // Arc centres are the corners; near a corner a continuum is not reached.
  const Point2 q = c + 0.2 * (r.corners()[0].vertex - c);
  CHECK(count_normals2(body, q) >= 2);
  const auto feet = normal_feet2(body, c);
  CHECK(feet.size() == 6);
  for (const auto& f : feet) CHECK(f.chord_length == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("polytope counts") {
  const Polytope3 cube = standard_polytope("cube");
  const NormalCount3 c = count_normals3(cube, {0, 0, 0});
  CHECK(c.count == 26);
  CHECK(c.by_dim[2] == 6);
  CHECK(c.by_dim[1] == 12);
  CHECK(c.by_dim[0] == 8);
  // Every interior point of a cube sees all 26 faces.
  CHECK(count_normals3(cube, {0.1, 0.05, -0.2}).count == 26);
  const Polytope3 tet = convex_hull3({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
  const NormalCount3 t = count_normals3(tet, {0, 0, 0});
  CHECK(t.by_dim[2] == 4);
  CHECK(t.by_dim[1] == 6);
  CHECK(t.by_dim[0] == 4);
  CHECK_THROWS_AS(count_normals3(cube, {2, 0, 0}), GeometryError);
}
