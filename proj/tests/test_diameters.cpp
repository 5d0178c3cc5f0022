#include <cmath>
#include <vector>

#include "convexnormals/diameters.hpp"
#include "convexnormals/errors.hpp"
#include "convexnormals/normals.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cvxn;
using namespace cvxn::testing;

namespace {
// Longest chord in direction v: radial function of K - K, whose support
// function is the width w(phi) = h(phi) + h(phi + pi).
double longest_chord(const Body2& b, double theta) {
  double best = 1e300;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double phi = 2 * kPi * i / n;
    const double c = std::cos(phi - theta);
    if (c < 1e-3) continue;
    best = std::min(best, (support2(b, phi) + support2(b, phi + kPi)) / c);
  }
  return best;
}

// Direction sweep: for each chord direction, find the longest chord's
// single-vertex endpoint and test on which side of that line p lies.
int sweep_polygon_diameters(const Polygon2& poly, Point2 p) {
  const int n = 20000;
  auto side = [&](double theta) {
    const Vec2 v{std::cos(theta), std::sin(theta)};
    // normal of K - K at the radial point: minimiser of w(phi)/<v, u(phi)>
    double best = 1e300, phi_best = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Vec2 nrm = -1.0 * poly.inward_normal(i);
      for (double sgn : {1.0, -1.0}) {
        const double phi = std::atan2(sgn * nrm.y, sgn * nrm.x);
        const double c = std::cos(phi - theta);
        if (c <= 1e-12) continue;
        const double val = (support2(poly, phi) + support2(poly, phi + kPi)) / c;
        if (val < best) best = val, phi_best = phi;
      }
    }
    // the side of the extremal edge normal that ends in a single vertex
    auto extreme = [&](double phi) {
      std::size_t arg = 0;
      double top = -1e300, second = -1e300;
      for (std::size_t i = 0; i < poly.size(); ++i) {
        const double s = poly.vertex(i).x * std::cos(phi) + poly.vertex(i).y * std::sin(phi);
        if (s > top) second = top, top = s, arg = i;
        else second = std::max(second, s);
      }
      return std::pair{arg, top - second};
    };
    const auto [ia, ga] = extreme(phi_best);
    const auto [ib, gb] = extreme(phi_best + kPi);
    const Point2 q = ga > gb ? poly.vertex(ia) : poly.vertex(ib);
    return cross(v, p - q);
  };
  int changes = 0;
  double prev = side(0.0);
  for (int i = 1; i <= n; ++i) {
    const double cur = side(kPi * i / n);
    if ((prev < 0) != (cur < 0)) ++changes;
    prev = cur;
  }
  return changes;  // over a half turn the line returns with reversed direction
}
}  // namespace

TEST_CASE("ellipse chord at angle zero is the major axis") {
  const SmoothBody2 e = fit_ellipse(2.0, 1.0).body;
  const DiameterChord c = diameter_chord(e, 0.0);
  CHECK(c.length == doctest::Approx(4.0).epsilon(1e-3));
  CHECK(diameter_chord(e, kPi / 2).length == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("chord lengths match the radial function of the difference body") {
  const SmoothBody2 b = random_fourier(8, 2, 4, 0.5);
  for (int i = 0; i < 12; ++i) {
    const double theta = 2 * kPi * i / 12 + 0.1;
    const DiameterChord c = diameter_chord(b, theta);
    CHECK(c.length == doctest::Approx(longest_chord(b, theta)).epsilon(1e-6));
    CHECK(norm(c.a - c.b) == doctest::Approx(c.length).epsilon(1e-9));
    // parallel supporting lines at both ends
    const Vec2 u{std::cos(c.normal_angle), std::sin(c.normal_angle)};
    CHECK(dot(c.a, u) == doctest::Approx(b.h(c.normal_angle)).epsilon(1e-9));
    CHECK(-dot(c.b, u) == doctest::Approx(b.h(c.normal_angle + kPi)).epsilon(1e-9));
  }
}

TEST_CASE("half square integral equals the difference body area") {
  const SmoothBody2 b = random_fourier(8, 3, 5, 0.6);
  CHECK(half_square_integral(b, 2048) == doctest::Approx(difference_body_area(b)).epsilon(1e-8));
  const auto rows = theta_sweep(b, 8);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0].length == doctest::Approx(rows[4].length).epsilon(1e-12));
}

TEST_CASE("disk: one diameter away from the centre") {
  const SmoothBody2 d = SmoothBody2::disk(1.0);
  CHECK(count_diameters_smooth(d, {0.3, 0.2}).count == 1);
  CHECK(count_diameters_smooth(d, {0.0, 0.0}).infinite);
  CHECK_THROWS_AS(count_diameters_smooth(d, {1.2, 0.0}), GeometryError);
}

TEST_CASE("constant width: diameters are the normals, halved") {
  const SmoothBody2 b = SmoothBody2::create(1.0, {0.0, 0.0, 0.1}, {});
  for (const Point2& p : sample_interior2(b, 200, 4)) CHECK(2 * count_diameters_smooth(b, p).count == count_normals2(b, p));
}

TEST_CASE("polygon counts match a direction sweep") {
  const Polygon2 poly = random_polygon(13, 2);
  for (const Point2& p : sample_interior2(poly, 60, 6)) {
    const DiameterCount d = count_diameters_polygon(poly, p);
    if (d.degenerate) continue;
    CHECK(d.count == sweep_polygon_diameters(poly, p));
  }
}

TEST_CASE("affine invariance") {
  const Polygon2 poly = random_polygon(13, 4);
  const Polygon2 t = poly.transformed(1.5, 0.7, -0.2, 0.8, {3.0, -1.0});
  for (const Point2& p : sample_interior2(poly, 200, 8)) {
    const Point2 q{1.5 * p.x + 0.7 * p.y + 3.0, -0.2 * p.x + 0.8 * p.y - 1.0};
    CHECK(count_diameters_polygon(poly, p).count == count_diameters_polygon(t, q).count);
  }
  const SmoothBody2 b = random_fourier(1, 1, 3, 0.4);
  for (const Point2& p : sample_interior2(b, 20, 2)) {
    const SmoothBody2 s = b.scaled(2.0);
    CHECK(count_diameters_smooth(b, p).count == count_diameters_smooth(s, 2.0 * p).count);
  }
}

TEST_CASE("antipodal structure") {
  const std::vector<Point2> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  int parallel = 0;
  for (const AntipodalPair& a : antipodal_pairs(build_polygon(sq))) parallel += a.parallel ? 1 : 0;
  CHECK(parallel == 2);
  const DiameterCount d = count_diameters_polygon(build_polygon(sq), {0.3, 0.6});
  CHECK(d.infinite);
  const std::vector<Point2> tri{{0, 0}, {1, 0}, {0.3, 0.8}};
  const Polygon2 t = build_polygon(tri);
  CHECK(antipodal_pairs(t).size() == 3);
  CHECK(count_diameters_polygon(t, {0.4, 0.3}).count == 3);
}
