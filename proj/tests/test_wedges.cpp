#include <cmath>
#include <vector>

#include "convexnormals/averaging.hpp"
#include "convexnormals/bodies3d.hpp"
#include "convexnormals/errors.hpp"
#include "convexnormals/normals.hpp"
#include "convexnormals/wedges.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cvxn;
using namespace cvxn::testing;

namespace {
bool inside_region(const std::vector<Point2>& r, Point2 p) {
  if (r.size() < 3) return false;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (cross(r[(i + 1) % r.size()] - r[i], p - r[i]) < 0) return false;
  return true;
}
}  // namespace

TEST_CASE("clip keeps the requested half-plane") {
  const std::vector<Point2> sq{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
  const auto half = clip_halfplane(sq, {1, 0}, 1.0);
  CHECK(shoelace_area(half) == doctest::Approx(2.0));
  CHECK(clip_halfplane(sq, {1, 0}, -1.0).empty());
  CHECK(shoelace_area(clip_halfplane(sq, {1, 1}, 10.0)) == doctest::Approx(4.0));
}

TEST_CASE("unit square: I = 8, n = 8") {
  const std::vector<Point2> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const Polygon2 sq = build_polygon(pts);
  const WedgeAverage a = exact_average_normals(sq);
  CHECK(std::abs(a.mean - 8.0) < 1e-12);
  CHECK(std::abs(a.integral - 8.0) < 1e-12);
  CHECK(std::abs(euler_residual(sq)) < 1e-12);
  CHECK(std::abs(wedge_fill_deficiency(sq)) < 1e-12);
}

TEST_CASE("wedge membership reproduces the pointwise count") {
  for (std::uint64_t i = 0; i < 10; ++i) {
    const Polygon2 poly = random_polygon(11, i);
    const auto wedges = all_wedges(poly);
    for (const Point2& p : sample_interior2(poly, 300, 100 + i)) {
      int in = 0;
      for (const Wedge& w : wedges) in += inside_region(w.region, p) ? 1 : 0;
      CHECK(in == brute_polygon_normals(poly, p));
    }
  }
}

TEST_CASE("wedge areas integrate the count (grid oracle)") {
  const Polygon2 poly = random_polygon(5, 3);
  const BBox2 box = bounding_box(poly);
  const int g = 400;
  double sum = 0.0;
  const double cell = (box.xmax - box.xmin) * (box.ymax - box.ymin) / (double(g) * g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      const Point2 p{box.xmin + (i + 0.5) * (box.xmax - box.xmin) / g, box.ymin + (j + 0.5) * (box.ymax - box.ymin) / g};
      if (contains2(poly, p)) sum += brute_polygon_normals(poly, p) * cell;
    }
  CHECK(exact_average_normals(poly).integral == doctest::Approx(sum).epsilon(5e-3));
}

TEST_CASE("wedge regions lie inside the polygon") {
  const Polygon2 poly = random_polygon(9, 1);
  const double area = measure2d(poly).area;
  for (const Wedge& w : all_wedges(poly)) {
    CHECK(w.area >= 0.0);
    CHECK(w.area <= area * (1 + 1e-12));
    for (const Point2& q : w.region) CHECK(contains2(poly, q, 1e-9));
  }
}

TEST_CASE("Euler residual vanishes on random polygons") {
  for (std::uint64_t i = 0; i < 50; ++i) CHECK(std::abs(euler_residual(random_polygon(21, i))) < 1e-9);
}

TEST_CASE("symmetric polygons: n <= 8 with equality for concyclic vertices") {
  for (std::uint64_t i = 0; i < 30; ++i) {
    const Polygon2 p = random_symmetric_polygon(4, i);
    REQUIRE(is_centrally_symmetric(p));
    CHECK(exact_average_normals(p).mean <= 8.0 + 1e-9);
    CHECK(wedge_fill_deficiency(p) >= -1e-9);
  }
  const Polygon2 c = concyclic_symmetric({0.1, 0.9, 2.0});
  CHECK(exact_average_normals(c).mean == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(std::abs(wedge_fill_deficiency(c)) < 1e-9);
  const std::vector<Point2> hex{{2, 0}, {0.6, 1}, {-1.2, 1}, {-2, 0}, {-0.6, -1}, {1.2, -1}};
  CHECK(exact_average_normals(build_polygon(hex)).mean < 8.0 - 1e-6);
  const std::vector<Point2> tri{{0, 0}, {1, 0}, {0.2, 0.9}};
  CHECK_THROWS_AS(wedge_fill_deficiency(build_polygon(tri)), GeometryError);
}

TEST_CASE("exact average agrees with Monte Carlo") {
  const Polygon2 p = random_polygon(3, 7);
  const EstimateReport r = estimate_interior_average(p, Counter{}, 40000, 17);
  CHECK(std::abs(r.mean - exact_average_normals(p).mean) < 4 * r.std_error);
}

TEST_CASE("nnls and conical hulls") {
  const std::vector<Vec3> gens{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  double res = 0;
  const auto x = nnls(gens, {1, 2, 3}, &res);
  CHECK(x[0] == doctest::Approx(1));
  CHECK(x[2] == doctest::Approx(3));
  CHECK(res < 1e-12);
  nnls(gens, {-1, 2, 3}, &res);
  CHECK(res == doctest::Approx(1));
  CHECK(in_conical_hull(gens, {0.5, 0.1, 2}));
  CHECK_FALSE(in_conical_hull(gens, {0.5, -0.1, 2}));
}

TEST_CASE("cube vertex wedges") {
  const Polytope3 cube = standard_polytope("cube");
  int inside = 0;
  for (int v = 0; v < static_cast<int>(cube.vertices().size()); ++v)
    inside += vertex_wedge_contains3(cube, v, {0.0, 0.0, 0.0}) ? 1 : 0;
  CHECK(inside == 8);
}
