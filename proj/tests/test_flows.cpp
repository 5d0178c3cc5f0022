#include <cmath>
#include <vector>

#include "convexnormals/errors.hpp"
#include "convexnormals/evolute.hpp"
#include "convexnormals/flows.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cvxn;
using namespace cvxn::testing;

TEST_CASE("flow kinds") {
  CHECK(parse_flow_kind("outward_eikonal").kind == FlowKind::OutwardEikonal);
  CHECK(parse_flow_kind("inward_eikonal").kind == FlowKind::InwardEikonal);
  CHECK(parse_flow_kind("curvature_power_in").kind == FlowKind::CurvaturePower);
  CHECK_FALSE(parse_flow_kind("curvature_power_in").outward);
  CHECK_THROWS_AS(parse_flow_kind("mean_curvature"), GeometryError);
}

TEST_CASE("offsets shift a0 and keep the centres of curvature") {
  const SmoothBody2 d = offset_body(SmoothBody2::disk(1.0), 0.5);
  CHECK(d.a0() == doctest::Approx(1.5));
  const SmoothBody2 b = random_fourier(6, 0, 5, 0.5);
  const SmoothBody2 g = offset_body(b, 0.3);
  for (int i = 0; i < 32; ++i) {
    const double t = 2 * kPi * i / 32;
    CHECK(norm(g.centre_of_curvature(t) - b.centre_of_curvature(t)) < 1e-12);
    CHECK(g.rho(t) == doctest::Approx(b.rho(t) + 0.3).epsilon(1e-14));
  }
  // Steiner formula
  const Measure2 m0 = measure2d(b), m1 = measure2d(g);
  CHECK(m1.area == doctest::Approx(m0.area + 0.3 * m0.perimeter + kPi * 0.09).epsilon(1e-10));
  // scaling commutes with offsets
  const SmoothBody2 s1 = offset_body(b.scaled(2.0), 0.6), s2 = offset_body(b, 0.3).scaled(2.0);
  CHECK(s1.a0() == doctest::Approx(s2.a0()).epsilon(1e-15));
  CHECK(s1.cos_coeffs()[1] == doctest::Approx(s2.cos_coeffs()[1]).epsilon(1e-15));
}

TEST_CASE("inward offsets stop at the rolling radius") {
  const SmoothBody2 b = SmoothBody2::create(1.0, {0.0, 0.1}, {});
  CHECK(offset_body(b, -0.69).min_rho() == doctest::Approx(0.01).epsilon(1e-6));
  try {
    offset_body(b, -0.71);
    FAIL("expected a singularity");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::Singularity);
  }
}

TEST_CASE("disk under the eikonal flow keeps n = 2") {
  FlowSpec spec;
  spec.t_end = 1.0;
  spec.steps = 3;
  const FlowTrace tr = evolve_flow(SmoothBody2::disk(1.0), spec, 2000, 1);
  REQUIRE(tr.times.size() == 4);
  for (const EstimateReport& r : tr.n_values) CHECK(r.mean == 2.0);
  CHECK(tr.bodies.back().a0() == doctest::Approx(2.0));
}

TEST_CASE("outward eikonal: n(t) - 2 scales like 1/area") {
  // Normals counts are unchanged by the offset, so I(K(t)) - 2 area(t) is constant.
  const SmoothBody2 b = SmoothBody2::create(1.0, {0.0, 0.12}, {0.0, 0.0, 0.02});
  FlowSpec spec;
  spec.t_end = 0.6;
  spec.steps = 3;
  const FlowTrace tr = evolve_flow(b, spec, 40000, 3);
  const double e0 = (tr.n_values[0].mean - 2.0) * measure2d(tr.bodies[0]).area;
  for (std::size_t i = 1; i < tr.times.size(); ++i) {
    const double predicted = 2.0 + e0 / measure2d(tr.bodies[i]).area;
    CHECK(std::abs(tr.n_values[i].mean - predicted) < 5 * (tr.n_values[i].std_error + tr.n_values[0].std_error));
    CHECK(tr.n_values[i].mean < tr.n_values[i - 1].mean);
    CHECK(tr.n_surf_values[i].mean == 2.0);
  }
}

TEST_CASE("inward eikonal increases n") {
  const SmoothBody2 b = SmoothBody2::create(1.0, {0.0, 0.12}, {});
  FlowSpec spec = parse_flow_kind("inward_eikonal");
  spec.t_end = 0.4;
  spec.steps = 2;
  const FlowTrace tr = evolve_flow(b, spec, 20000, 3);
  CHECK(tr.n_values[2].ci_lo > tr.n_values[0].ci_hi);
  CHECK(tr.bodies[2].a0() == doctest::Approx(0.6));
}

TEST_CASE("curvature power flow on a disk is exponential in r = 1") {
  FlowSpec spec = parse_flow_kind("curvature_power_out");
  spec.t_end = 0.5;
  spec.steps = 5;
  bool truncated = true;
  const auto out = curvature_power_flow(SmoothBody2::disk(1.0), spec, 4, &truncated);
  CHECK_FALSE(truncated);
  REQUIRE(out.size() == 6);
  CHECK(out.back().a0() == doctest::Approx(std::exp(0.5)).epsilon(1e-2));
  spec.outward = false;
  const auto in = curvature_power_flow(SmoothBody2::disk(1.0), spec, 4, &truncated);
  CHECK(in.back().a0() == doctest::Approx(std::exp(-0.5)).epsilon(1e-2));
}

TEST_CASE("outward curvature power flow rounds a near-disk") {
  FlowSpec spec = parse_flow_kind("curvature_power_out");
  spec.t_end = 0.3;
  spec.steps = 3;
  bool truncated = true;
  const auto out = curvature_power_flow(SmoothBody2::create(1.0, {0.0, 0.08, 0.02}, {}), spec, 8, &truncated);
  double prev = 1e300;
  for (const SmoothBody2& b : out) {
    double harm = 0.0;
    for (int k = 2; k <= b.degree(); ++k) harm += std::abs(b.cos_coeffs()[k - 1]) + std::abs(b.sin_coeffs()[k - 1]);
    CHECK(harm / b.a0() < prev);
    prev = harm / b.a0();
  }
}

TEST_CASE("derivative identity") {
  const Body2 b = SmoothBody2::create(1.0, {0.0, 0.0, 0.05}, {});
  const DerivativeCheck d = derivative_residual(b, 1e-3, 200000, 5);
  CHECK(d.residual < d.ci_width + 0.05);
  CHECK(d.n_surf.mean == 2.0);
  const DerivativeCheck disk = derivative_residual(SmoothBody2::disk(1.0), 1e-3, 2000, 5);
  CHECK(disk.residual == doctest::Approx(0.0));
  const std::vector<Point2> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK_THROWS_AS(derivative_residual(build_polygon(sq), 1e-3, 1000, 1), GeometryError);
}
