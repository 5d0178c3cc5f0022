#include "convexnormals/flows.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "convexnormals/errors.hpp"
#include "convexnormals/evolute.hpp"

namespace cvxn {

const char* to_string(FlowKind k) {
  switch (k) {
    case FlowKind::OutwardEikonal: return "outward_eikonal";
    case FlowKind::InwardEikonal: return "inward_eikonal";
    case FlowKind::CurvaturePower: return "curvature_power";
  }
  return "unknown";
}

FlowSpec parse_flow_kind(const std::string& name) {
  FlowSpec s;
  if (name == "outward_eikonal") s.kind = FlowKind::OutwardEikonal;
  else if (name == "inward_eikonal") s.kind = FlowKind::InwardEikonal;
  else if (name == "curvature_power_out" || name == "curvature_power") s.kind = FlowKind::CurvaturePower;
  else if (name == "curvature_power_in") {
    s.kind = FlowKind::CurvaturePower;
    s.outward = false;
  } else {
    fail(ErrorKind::Parse, "unknown flow kind '" + name + "'");
  }
  return s;
}

SmoothBody2 offset_body(const SmoothBody2& body, double t) {
  if (t < 0.0) {
    const double r = rolling_ball_radius(body);
    if (-t >= r) {
      std::ostringstream os;
      os << "inward offset " << -t << " reaches the rolling ball radius " << r;
      fail(ErrorKind::Singularity, os.str());
    }
  }
  return body.offset(t);
}

std::vector<SmoothBody2> curvature_power_flow(const SmoothBody2& body, const FlowSpec& spec, int degree,
                                              bool* truncated) {
  const int n = std::max(256, 8 * degree);
  std::vector<double> cs(n), sn(n), h(n);
  for (int j = 0; j < n; ++j) {
    const double t = kTwoPi * j / n;
    cs[j] = std::cos(t);
    sn[j] = std::sin(t);
  }
  double a0 = body.a0();
  std::vector<double> ca(degree, 0.0), sb(degree, 0.0);
  for (int k = 1; k <= std::min(degree, body.degree()); ++k) {
    ca[k - 1] = body.cos_coeffs()[k - 1];
    sb[k - 1] = body.sin_coeffs()[k - 1];
  }
  const double sign = spec.outward ? 1.0 : -1.0;
  std::vector<SmoothBody2> out{body};
  *truncated = false;
  double t = 0.0;
  std::vector<double> rho(n);
  for (int step = 1; step <= spec.steps; ++step) {
    const double target = spec.t_end * step / spec.steps;
    while (t < target - 1e-15) {
      // rho on the grid from the coefficients; cos/sin(k t) by index arithmetic.
      double rmax = 0.0, rmin = 1e300;
      for (int j = 0; j < n; ++j) {
        double r = a0;
        for (int k = 1; k <= degree; ++k) {
          const int idx = static_cast<int>((static_cast<long long>(k) * j) % n);
          r += (1.0 - static_cast<double>(k) * k) * (ca[k - 1] * cs[idx] + sb[k - 1] * sn[idx]);
        }
        rho[j] = r;
        rmax = std::max(rmax, r);
        rmin = std::min(rmin, r);
      }
      if (rmin <= SmoothBody2::kMinRho) {
        *truncated = true;
        return out;
      }
      // Linearised stiffness r rho^(r-1) k^2 bounds the explicit step.
      const double stiff = spec.power * std::pow(spec.power >= 1.0 ? rmax : rmin, spec.power - 1.0) *
                           static_cast<double>(degree) * degree;
      const double dt = std::min(target - t, 0.4 / std::max(stiff, 1e-12));
      // h_new = h + dt * sign * rho^r, projected back onto the harmonics.
      double na0 = 0.0;
      std::vector<double> nca(degree, 0.0), nsb(degree, 0.0);
      for (int j = 0; j < n; ++j) {
        const double v = sign * std::pow(rho[j], spec.power);
        na0 += v;
        for (int k = 1; k <= degree; ++k) {
          const int idx = static_cast<int>((static_cast<long long>(k) * j) % n);
          nca[k - 1] += v * cs[idx];
          nsb[k - 1] += v * sn[idx];
        }
      }
      a0 += dt * na0 / n;
      for (int k = 0; k < degree; ++k) {
        ca[k] += dt * 2.0 * nca[k] / n;
        sb[k] += dt * 2.0 * nsb[k] / n;
      }
      t += dt;
    }
    try {
      out.push_back(SmoothBody2::create(a0, ca, sb));
    } catch (const GeometryError&) {
      *truncated = true;
      return out;
    }
  }
  return out;
}

FlowTrace evolve_flow(const SmoothBody2& body, const FlowSpec& spec, std::size_t n_samples, std::uint64_t seed,
                      const SamplingOptions& opts) {
  if (spec.steps < 1) fail(ErrorKind::Validation, "flow needs at least one step");
  if (!(spec.t_end > 0.0)) fail(ErrorKind::Validation, "flow end time must be positive");
  FlowTrace trace;
  if (spec.kind == FlowKind::CurvaturePower) {
    const int degree = std::max(16, body.degree());
    trace.bodies = curvature_power_flow(body, spec, degree, &trace.truncated);
    for (std::size_t k = 0; k < trace.bodies.size(); ++k) trace.times.push_back(spec.t_end * k / spec.steps);
  } else {
    const double sign = spec.kind == FlowKind::OutwardEikonal ? 1.0 : -1.0;
    for (int k = 0; k <= spec.steps; ++k) {
      const double t = spec.t_end * k / spec.steps;
      try {
        trace.bodies.push_back(offset_body(body, sign * t));
      } catch (const GeometryError&) {
        trace.truncated = true;
        break;
      }
      trace.times.push_back(t);
    }
  }
  if (n_samples > 0) {
    const Counter normals{CounterKind::Normals, nullptr};
    // One sampling box for every time, so sample i is paired across the trace.
    SamplingOptions paired = opts;
    if (!paired.box) {
      BBox2 box = bounding_box(Body2{trace.bodies.front()});
      for (const auto& b : trace.bodies) {
        const BBox2 bb = bounding_box(Body2{b});
        box = {std::min(box.xmin, bb.xmin), std::max(box.xmax, bb.xmax), std::min(box.ymin, bb.ymin),
               std::max(box.ymax, bb.ymax)};
      }
      paired.box = box;
    }
    for (const auto& b : trace.bodies) {
      trace.n_values.push_back(estimate_interior_average(b, normals, n_samples, seed, paired));
      trace.n_surf_values.push_back(estimate_boundary_average(b, normals, n_samples, seed, opts));
    }
  }
  return trace;
}

DerivativeCheck derivative_residual(const Body2& body, double dt, std::size_t n_samples, std::uint64_t seed,
                                    const SamplingOptions& opts) {
  const auto* sm = std::get_if<SmoothBody2>(&body);
  if (!sm) fail(ErrorKind::Unsupported, "derivative residual needs a smooth body");
  if (!(dt > 0.0)) fail(ErrorKind::Validation, "dt must be positive");
  const SmoothBody2 grown = offset_body(*sm, dt);
  const Counter normals{CounterKind::Normals, nullptr};
  // Both runs draw from the box of the larger body so sample i is paired.
  SamplingOptions paired = opts;
  paired.box = bounding_box(Body2{grown});
  const SampleValues v0 = interior_sample_values(body, normals, n_samples, seed, paired);
  const SampleValues v1 = interior_sample_values(Body2{grown}, normals, n_samples, seed, paired);

  DerivativeCheck out;
  out.n0 = summarize(v0.values, v0.degenerate_resampled);
  out.n_surf = estimate_boundary_average(body, normals, n_samples, seed, opts);
  double mean = 0.0, sq = 0.0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double d = (v1.values[i] - v0.values[i]) / dt;
    mean += d;
    sq += d * d;
  }
  mean /= n_samples;
  const double var = std::max(0.0, (sq - n_samples * mean * mean) / (n_samples - 1.0));
  const double se_lhs = std::sqrt(var / n_samples);
  const Measure2 m = measure2d(body);
  const double ratio = m.perimeter / m.area;
  out.lhs = mean;
  out.rhs = ratio * (out.n_surf.mean - out.n0.mean);
  out.residual = std::abs(out.lhs - out.rhs);
  const double se_rhs = ratio * std::hypot(out.n_surf.std_error, out.n0.std_error);
  out.ci_width = 2.0 * 1.96 * std::hypot(se_lhs, se_rhs);
  return out;
}

}  // namespace cvxn
