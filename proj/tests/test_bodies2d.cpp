#include <cmath>
#include <vector>

#include "convexnormals/bodies2d.hpp"
#include "convexnormals/errors.hpp"
#include "doctest.h"

using namespace cvxn;

namespace {
Polygon2 unit_square() {
  const std::vector<Point2> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.5, 0}};
  return build_polygon(pts);
}
}  // namespace

TEST_CASE("hull drops interior and collinear points") {
  const Polygon2 sq = unit_square();
  CHECK(sq.size() == 4);
  const Measure2 m = measure2d(sq);
  CHECK(m.area == doctest::Approx(1.0));
  CHECK(m.perimeter == doctest::Approx(4.0));
}

TEST_CASE("degenerate polygon input is rejected") {
  const std::vector<Point2> line{{0, 0}, {1, 1}, {2, 2}};
  try {
    build_polygon(line);
    FAIL("expected throw");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::DegenerateBody);
  }
}

TEST_CASE("fourier body measures agree with quadrature") {
  const SmoothBody2 b = SmoothBody2::create(1.0, {0.0, 0.05, 0.02}, {0.0, 0.01, 0.0});
  // Independent oracle: shoelace on a fine boundary polygon.
  std::vector<Point2> pts;
  const int n = 20000;
  for (int j = 0; j < n; ++j) pts.push_back(b.point(kTwoPi * j / n));
  const Measure2 m = measure2d(b);
  CHECK(m.area == doctest::Approx(shoelace_area(pts)).epsilon(1e-7));
  CHECK(m.perimeter == doctest::Approx(kTwoPi));
  CHECK(smooth_arc_length_at(b, kTwoPi) == doctest::Approx(kTwoPi));
  const double s = 2.3;
  CHECK(smooth_arc_length_at(b, smooth_angle_at_arc_length(b, s)) == doctest::Approx(s));
}

TEST_CASE("non-convex support function is rejected") {
  CHECK_THROWS_AS(SmoothBody2::create(1.0, {0.0, 0.0, 0.5}, {}), GeometryError);
}

TEST_CASE("support fit recovers a trigonometric polynomial") {
  std::vector<std::pair<double, double>> samples;
  for (int j = 0; j < 64; ++j) {
    const double t = kTwoPi * j / 64;
    samples.push_back({t, 2.0 + 0.1 * std::cos(2 * t) - 0.05 * std::sin(3 * t)});
  }
  const SupportFit fit = fit_support_body(samples, 4);
  CHECK(fit.max_residual < 1e-12);
  CHECK(fit.body.a0() == doctest::Approx(2.0));
  CHECK(fit.body.cos_coeffs()[1] == doctest::Approx(0.1));
}

TEST_CASE("reuleaux polygons have constant width") {
  for (int k : {3, 5, 7}) {
    const ArcBody2 r = build_reuleaux(k, 1.0);
    double w = 0.0;
    REQUIRE(r.constant_width(&w));
    CHECK(w == doctest::Approx(1.0));
    CHECK(measure2d(r).perimeter == doctest::Approx(kPi));  // Barbier
  }
  const double a = measure2d(build_reuleaux(3, 1.0)).area;
  CHECK(a == doctest::Approx((kPi - std::sqrt(3.0)) / 2.0));
  CHECK(difference_body_area(build_reuleaux(3, 1.0)) == doctest::Approx(kPi));
}

TEST_CASE("interior samples are inside and deterministic") {
  const Body2 body = build_reuleaux(3, 2.0);
  const auto a = sample_interior2(body, 500, 42);
  const auto b = sample_interior2(body, 500, 42);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(contains2(body, a[i]));
    CHECK(a[i].x == b[i].x);
  }
}

TEST_CASE("difference body of a triangle is six times its area") {
  const std::vector<Point2> tri{{0, 0}, {1, 0}, {0.3, 0.8}};
  const Body2 t = build_polygon(tri);
  CHECK(difference_body_area(t) == doctest::Approx(6.0 * measure2d(t).area));
  const Body2 disk = SmoothBody2::disk(1.5);
  CHECK(difference_body_area(disk) == doctest::Approx(4.0 * measure2d(disk).area));
}
