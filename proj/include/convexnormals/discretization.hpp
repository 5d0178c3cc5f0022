#pragma once

#include <cstdint>
#include <vector>

#include "convexnormals/averaging.hpp"
#include "convexnormals/bodies2d.hpp"

namespace cvxn {

/// Polygon on k boundary points at equal arc-length spacing, starting at
/// normal angle 0.
Polygon2 inscribe_polygon(const SmoothBody2& body, int k);

struct RaceRow {
  int k = 0;
  double n_polygon = 0.0;  // exact wedge average
  EstimateReport n_body;
  double margin = 0.0;  // n_polygon - upper 95% bound of n(K)
};

/// n(K) is estimated once and shared by all rows.
std::vector<RaceRow> discretization_race(const SmoothBody2& body, const std::vector<int>& k_list,
                                         std::size_t n_samples, std::uint64_t seed,
                                         const SamplingOptions& opts = {});

}  // namespace cvxn
