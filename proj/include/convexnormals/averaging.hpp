#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convexnormals/bodies2d.hpp"
#include "convexnormals/bodies3d.hpp"
#include "convexnormals/minkowski.hpp"

namespace cvxn {

enum class CounterKind { Normals, Diameters, Minkowski };
const char* to_string(CounterKind k);
/// "normals" | "diameters" | "minkowski"; throws Parse otherwise.
CounterKind parse_counter(const std::string& name);

/// Pointwise counter; `norm` is required for the Minkowski kind.
struct Counter {
  CounterKind kind = CounterKind::Normals;
  const NormBall2* norm = nullptr;
};

struct PointCount {
  int value = 0;
  bool degenerate = false;
};

/// One counter evaluation at an interior point (no containment check).
/// Throws Unsupported for combinations without a counter, and
/// DegenerateBody when a polygon sees infinitely many diameters.
PointCount evaluate_counter(const Body2& body, const Counter& counter, Point2 p);

struct EstimateReport {
  double mean = 0.0;
  double std_error = 0.0;
  double ci_lo = 0.0, ci_hi = 0.0;  // mean -+ 1.96 std_error
  std::size_t samples_used = 0;
  std::size_t degenerate_resampled = 0;
  std::optional<double> exact;
  double ci_width() const { return ci_hi - ci_lo; }
};

struct SamplingOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  /// Inward offset of boundary samples, relative to the inner radius.
  double boundary_epsilon = 1e-7;
  /// Sampling box for interior draws (defaults to the bounding box). A box
  /// shared between nested bodies keeps their draws paired.
  std::optional<BBox2> box;
};

/// Resampling budget: more than this fraction of degenerate draws aborts.
inline constexpr double kMaxDegenerateFraction = 0.01;

EstimateReport estimate_interior_average(const Body2& body, const Counter& counter, std::size_t n,
                                         std::uint64_t seed, const SamplingOptions& opts = {});
/// Polytopes support the normals counter only.
EstimateReport estimate_interior_average(const Polytope3& body, const Counter& counter, std::size_t n,
                                         std::uint64_t seed, const SamplingOptions& opts = {});
EstimateReport estimate_boundary_average(const Body2& body, const Counter& counter, std::size_t n,
                                         std::uint64_t seed, const SamplingOptions& opts = {});
/// Per-sample counter values of an interior run (sample i uses stream (seed, i)).
struct SampleValues {
  std::vector<int> values;
  std::size_t degenerate_resampled = 0;
};
SampleValues interior_sample_values(const Body2& body, const Counter& counter, std::size_t n,
                                    std::uint64_t seed, const SamplingOptions& opts = {});
/// Mean, standard error and 95% interval of integer samples.
EstimateReport summarize(const std::vector<int>& values, std::size_t degenerate_resampled);

/// d(K) through the diameters counter.
EstimateReport average_diameters(const Body2& body, std::size_t n, std::uint64_t seed,
                                 const SamplingOptions& opts = {});

inline constexpr int kFieldOutside = -1;
inline constexpr int kFieldDegenerate = -2;

struct FieldMap {
  int nx = 0, ny = 0;
  BBox2 box{};
  std::vector<int> values;  // row-major, row 0 at the bottom (ymin)
  int at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * nx + ix]; }
};

/// Counter at cell centres of an nx x ny grid over the bounding box.
FieldMap field_map(const Body2& body, int nx, int ny, const Counter& counter, const SamplingOptions& opts = {});

}  // namespace cvxn
