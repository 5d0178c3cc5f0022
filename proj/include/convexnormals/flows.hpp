#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "convexnormals/averaging.hpp"
#include "convexnormals/bodies2d.hpp"

namespace cvxn {

enum class FlowKind { OutwardEikonal, InwardEikonal, CurvaturePower };
const char* to_string(FlowKind k);
/// outward_eikonal | inward_eikonal | curvature_power_out | curvature_power_in.
struct FlowSpec;
FlowSpec parse_flow_kind(const std::string& name);

struct FlowSpec {
  FlowKind kind = FlowKind::OutwardEikonal;
  double t_end = 1.0;
  int steps = 10;
  double power = 1.0;   // curvature power r
  bool outward = true;  // curvature power direction
};

struct FlowTrace {
  std::vector<double> times;
  std::vector<SmoothBody2> bodies;
  std::vector<EstimateReport> n_values;
  std::vector<EstimateReport> n_surf_values;
  bool truncated = false;  // convexity lost; trace ends at the last valid time
};

/// Body with support function h + t. Throws Singularity when an inward
/// offset reaches the rolling ball radius.
SmoothBody2 offset_body(const SmoothBody2& body, double t);

/// Curvature-power flow dh/dt = +-rho^r integrated on a grid by explicit
/// stepping with Fourier re-projection to `degree` harmonics. Returns the
/// bodies at the requested times; stops early on convexity loss.
std::vector<SmoothBody2> curvature_power_flow(const SmoothBody2& body, const FlowSpec& spec, int degree,
                                              bool* truncated);

/// Runs the flow and estimates n and n_surf at steps + 1 times with a
/// fixed seed (n_samples <= 0 skips the estimates). Interior draws at all
/// times share one box, so sample i is paired across the trace.
FlowTrace evolve_flow(const SmoothBody2& body, const FlowSpec& spec, std::size_t n_samples, std::uint64_t seed,
                      const SamplingOptions& opts = {});

struct DerivativeCheck {
  double residual = 0.0;  // |lhs - rhs|
  double lhs = 0.0;       // (n(K(dt)) - n(K)) / dt, paired samples
  double rhs = 0.0;       // (perimeter / area)(n_surf - n)
  double ci_width = 0.0;  // combined 95% width of lhs - rhs
  EstimateReport n0, n_surf;
};

/// Finite-difference check of dn/dt = (perimeter/area)(n_surf - n) under the
/// outward eikonal flow. Only smooth bodies are accepted.
DerivativeCheck derivative_residual(const Body2& body, double dt, std::size_t n_samples, std::uint64_t seed,
                                    const SamplingOptions& opts = {});

}  // namespace cvxn
