#include <cmath>
#include <vector>

#include "convexnormals/diameters.hpp"
#include "convexnormals/errors.hpp"
#include "convexnormals/minkowski.hpp"
#include "convexnormals/normals.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cvxn;
using namespace cvxn::testing;

namespace {
Polygon2 regular(int m, double r) {
  std::vector<Point2> pts;
  for (int i = 0; i < m; ++i) pts.push_back({r * std::cos(2 * kPi * i / m), r * std::sin(2 * kPi * i / m)});
  return build_polygon(pts);
}
}  // namespace

TEST_CASE("norm balls must be symmetric about the origin") {
  CHECK_THROWS_AS(NormBall2::create(regular(3, 1.0)), GeometryError);
  CHECK_THROWS_AS(NormBall2::create(SmoothBody2::disk(1.0, {0.1, 0.0})), GeometryError);
  CHECK_THROWS_AS(NormBall2::create(SmoothBody2::create(1.0, {0.0, 0.0, 0.05}, {})), GeometryError);
  CHECK_NOTHROW(NormBall2::create(regular(6, 1.0)));
}

TEST_CASE("gauges") {
  const NormBall2 d = NormBall2::create(SmoothBody2::disk(2.0));
  CHECK(d.gauge({3.0, 4.0}) == doctest::Approx(2.5));
  const std::vector<Point2> sq{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
  const NormBall2 m = NormBall2::create(build_polygon(sq));
  CHECK(m.gauge({0.5, -2.0}) == doctest::Approx(2.0));
  CHECK(m.area() == doctest::Approx(4.0));
  const NormBall2 o = NormBall2::create(SmoothBody2::create(1.0, {0.0, 0.15}, {}));
  for (int i = 0; i < 16; ++i) CHECK(o.gauge(o.boundary(i / 16.0)) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("Birkhoff direction of the disk is the Euclidean normal") {
  const NormBall2 d = NormBall2::create(SmoothBody2::disk(1.0));
  for (int i = 0; i < 8; ++i) {
    const double phi = 0.3 + i;
    const Vec2 v = birkhoff_direction(d, phi);
    CHECK(std::abs(dot(v, Vec2{std::cos(phi), std::sin(phi)})) < 1e-9);
  }
}

TEST_CASE("Euclidean norm reproduces the Euclidean counter") {
  const NormBall2 d = NormBall2::create(SmoothBody2::disk(1.0));
  const SmoothBody2 k = random_fourier(3, 3, 4, 0.6);
  for (const Point2& p : sample_interior2(k, 300, 2)) {
    const NormalCount a = count_minkowski_normals(d, k, p);
    const NormalCount b = classify_normals2(k, p);
    CHECK(a.total() == b.total());
    CHECK(a.stable == b.stable);
  }
}

TEST_CASE("constant M-width: normals are twice the diameters") {
  // K - K = 2M when the even part of h_K is h_M.
  const NormBall2 m = NormBall2::create(SmoothBody2::create(1.0, {0.0, 0.1}, {}));
  const SmoothBody2 k = SmoothBody2::create(1.0, {0.0, 0.1, 0.06}, {0.0, 0.0, 0.03});
  for (const Point2& p : sample_interior2(k, 300, 7))
    CHECK(count_minkowski_normals(m, k, p).total() == 2 * count_diameters_smooth(k, p).count);
}

TEST_CASE("tau of the disk, hexagons and the square") {
  const NormBall2 d = NormBall2::create(SmoothBody2::disk(1.0));
  CHECK(std::abs(hexagon_ratio_tau(d) - 3 * std::sqrt(3.0) / (2 * kPi)) < 1e-6);
  CHECK(std::abs(normed_width_bound(d) - 2 * kPi / (kPi - std::sqrt(3.0))) < 1e-6);
  CHECK(std::abs(hexagon_ratio_tau(NormBall2::create(regular(6, 1.0))) - 1.0) < 1e-6);
  const Polygon2 affine = regular(6, 1.0).transformed(2.0, 0.5, 0.3, 0.7);
  CHECK(std::abs(hexagon_ratio_tau(NormBall2::create(affine)) - 1.0) < 1e-6);
  const std::vector<Point2> sq{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
  CHECK(hexagon_ratio_tau(NormBall2::create(build_polygon(sq))) == doctest::Approx(0.75).epsilon(1e-6));
  const HexagonSearch h = largest_affine_hexagon(d);
  CHECK(norm(h.u) == doctest::Approx(1.0));
  CHECK(norm(h.v) == doctest::Approx(1.0));
  CHECK(norm(h.v - h.u) == doctest::Approx(1.0).epsilon(1e-6));
}
