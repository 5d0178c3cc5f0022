#include <cmath>

#include "convexnormals/evolute.hpp"
#include "convexnormals/normals.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cvxn;
using namespace cvxn::testing;

TEST_CASE("disk: every centre of curvature is the centre") {
  const SmoothBody2 d = SmoothBody2::disk(2.0, {1.0, -1.0});
  for (const EvolutePoint& e : curvature_profile(d, 16)) {
    CHECK(e.rho == doctest::Approx(2.0));
    CHECK(e.center.x == doctest::Approx(1.0));
    CHECK(e.center.y == doctest::Approx(-1.0));
  }
  CHECK(contains_evolute(d).contained);
  CHECK(rolling_ball_radius(d) == doctest::Approx(2.0));
}

TEST_CASE("closed-form profile of a two-lobed body") {
  // h = 1 + 0.15 cos 2t: rho = 1 - 0.45 cos 2t, r = h u + h' u_perp.
  const SmoothBody2 b = SmoothBody2::create(1.0, {0.0, 0.15}, {});
  for (const EvolutePoint& e : curvature_profile(b, 64)) {
    const double t = e.theta;
    const double h = 1 + 0.15 * std::cos(2 * t), dh = -0.3 * std::sin(2 * t);
    const double rho = 1 - 0.45 * std::cos(2 * t);
    CHECK(e.rho == doctest::Approx(rho).epsilon(1e-12));
    const double rx = h * std::cos(t) - dh * std::sin(t), ry = h * std::sin(t) + dh * std::cos(t);
    CHECK(e.boundary_point.x == doctest::Approx(rx).epsilon(1e-12));
    CHECK(e.center.x == doctest::Approx(rx - rho * std::cos(t)).epsilon(1e-12));
    CHECK(e.center.y == doctest::Approx(ry - rho * std::sin(t)).epsilon(1e-12));
  }
  const RollingBall rb = rolling_ball(b);
  CHECK(rb.radius == doctest::Approx(0.55).epsilon(1e-9));
  CHECK(std::abs(std::sin(rb.theta)) < 1e-6);
}

TEST_CASE("elongated ellipse: evolute leaves the body") {
  const SupportFit e = fit_ellipse(2.0, 1.0);
  CHECK(e.max_residual < 1e-3);
  const EvoluteContainment c = contains_evolute(e.body);
  CHECK_FALSE(c.contained);
  CHECK(c.worst_violation > 0.5);
  // the astroid cusps on the short axis sit at distance (a^2 - b^2)/b = 3
  CHECK(std::abs(std::sin(c.worst_theta)) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("evolute-inside bodies see two normals from every boundary point") {
  for (std::uint64_t i = 0; i < 5; ++i) {
    const SmoothBody2 b = random_fourier(31, i, 4, 0.25);
    REQUIRE(contains_evolute(b).contained);
    for (const BoundarySample& s : sample_boundary2(b, 200, 5 + i)) {
      const Point2 p = s.point - 1e-6 * Vec2{std::cos(s.normal_angle), std::sin(s.normal_angle)};
      CHECK(count_normals2(b, p) == 2);
      CHECK(brute_smooth_normals(b, p, 20000) == 2);
    }
  }
}

TEST_CASE("crossing the evolute changes the count by two") {
  const SmoothBody2 b = SmoothBody2::create(1.0, {0.0, 0.15}, {});
  // the evolute spans |x|, |y| <= 0.6 while the body reaches y = 0.85
  const int inside = count_normals2(b, {0.0, 0.0});
  const int outside = count_normals2(b, {0.0, 0.7});
  CHECK(inside - outside == 2);
}
