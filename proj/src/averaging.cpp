#include "convexnormals/averaging.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "convexnormals/diameters.hpp"
#include "convexnormals/errors.hpp"
#include "convexnormals/normals.hpp"
#include "convexnormals/rng.hpp"
#include "convexnormals/wedges.hpp"

namespace cvxn {

const char* to_string(CounterKind k) {
  switch (k) {
    case CounterKind::Normals: return "normals";
    case CounterKind::Diameters: return "diameters";
    case CounterKind::Minkowski: return "minkowski";
  }
  return "unknown";
}

CounterKind parse_counter(const std::string& name) {
  if (name == "normals") return CounterKind::Normals;
  if (name == "diameters") return CounterKind::Diameters;
  if (name == "minkowski" || name == "minkowski_normals") return CounterKind::Minkowski;
  fail(ErrorKind::Parse, "unknown counter '" + name + "' (expected normals, diameters or minkowski)");
}

PointCount evaluate_counter(const Body2& body, const Counter& counter, Point2 p) {
  switch (counter.kind) {
    case CounterKind::Normals: {
      const NormalCount c = classify_normals2(body, p, false);
      return {c.total(), c.flagged()};
    }
    case CounterKind::Diameters: {
      if (const auto* sm = std::get_if<SmoothBody2>(&body)) {
        const DiameterCount d = count_diameters_smooth(*sm, p, false);
        return {d.count, d.degenerate};
      }
      if (const auto* poly = std::get_if<Polygon2>(&body)) {
        const DiameterCount d = count_diameters_polygon(*poly, p, false);
        if (d.infinite) {
          std::ostringstream os;
          os << "polygon has parallel antipodal edges " << d.edge_a << " and " << d.edge_b
             << "; a positive-measure set sees infinitely many affine diameters";
          fail(ErrorKind::DegenerateBody, os.str());
        }
        return {d.count, d.degenerate};
      }
      fail(ErrorKind::Unsupported, "diameters counter needs a smooth body or a polygon");
    }
    case CounterKind::Minkowski: {
      if (!counter.norm) fail(ErrorKind::Validation, "minkowski counter needs a norm ball");
      const auto* sm = std::get_if<SmoothBody2>(&body);
      if (!sm || !counter.norm->smooth())
        fail(ErrorKind::Unsupported, "minkowski counter needs a smooth body and a smooth norm ball");
      const NormalCount c = count_minkowski_normals(*counter.norm, *sm, p, false);
      return {c.total(), c.flagged()};
    }
  }
  fail(ErrorKind::Unsupported, "unknown counter");
}

namespace {

unsigned worker_count(const SamplingOptions& opts, std::size_t n) {
  unsigned t = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(n, 1)));
}

// Runs fn(i) for i in [0, n) on contiguous blocks; rethrows the first error.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> pool;
  const std::size_t block = (n + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t lo = w * block, hi = std::min(n, lo + block);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

constexpr int kMaxRedrawsPerSample = 64;

// Sample i: draw from its own stream, redrawing on degenerate flags.
template <class Draw, class Eval>
SampleValues run_samples(std::size_t n, std::uint64_t seed, const SamplingOptions& opts, Draw&& draw, Eval&& eval) {
  if (n < 100) fail(ErrorKind::Validation, "at least 100 samples are required");
  SampleValues out;
  out.values.resize(n);
  std::vector<int> redraws(n);
  parallel_for(n, worker_count(opts, n), [&](std::size_t i) {
    SampleStream stream(seed, i);
    for (int r = 0;; ++r) {
      const PointCount c = eval(draw(stream));
      if (!c.degenerate) {
        out.values[i] = c.value;
        redraws[i] = r;
        return;
      }
      if (r >= kMaxRedrawsPerSample) fail(ErrorKind::Singularity, "body too singular: repeated degenerate draws");
    }
  });
  std::int64_t resampled = 0;
  for (int r : redraws) resampled += r;
  if (static_cast<double>(resampled) > kMaxDegenerateFraction * static_cast<double>(n)) {
    std::ostringstream os;
    os << "body too singular: " << resampled << " degenerate draws for " << n << " samples";
    fail(ErrorKind::Singularity, os.str());
  }
  out.degenerate_resampled = static_cast<std::size_t>(resampled);
  return out;
}

// A disk, possibly translated (the first harmonic is a translation).
bool is_round(const SmoothBody2& sm) {
  for (int k = 2; k <= sm.degree(); ++k)
    if (sm.cos_coeffs()[k - 1] != 0.0 || sm.sin_coeffs()[k - 1] != 0.0) return false;
  return true;
}

std::optional<double> exact_normals(const Body2& body) {
  if (const auto* poly = std::get_if<Polygon2>(&body)) return exact_average_normals(*poly).mean;
  if (const auto* sm = std::get_if<SmoothBody2>(&body)) {
    if (is_round(*sm)) return 2.0;
    return std::nullopt;
  }
  // Arc bodies of constant width w made of radius-w arcs: I(K) = area(K - K).
  const auto& arc = std::get<ArcBody2>(body);
  double w = 0.0;
  if (!arc.constant_width(&w)) return std::nullopt;
  for (const auto& a : arc.arcs())
    if (std::abs(a.radius - w) > 1e-12 * w) return std::nullopt;
  return kPi * w * w / measure2d(body).area;
}

}  // namespace

EstimateReport summarize(const std::vector<int>& values, std::size_t degenerate_resampled) {
  const std::size_t n = values.size();
  if (n < 2) fail(ErrorKind::Validation, "at least two samples are required");
  std::int64_t sum = 0, sumsq = 0;
  for (int v : values) {
    sum += v;
    sumsq += static_cast<std::int64_t>(v) * v;
  }
  // Integer moments keep the result independent of summation order.
  const auto nn = static_cast<__int128>(n);
  const __int128 spread = nn * sumsq - static_cast<__int128>(sum) * sum;
  EstimateReport r;
  r.mean = static_cast<double>(sum) / static_cast<double>(n);
  const double var = static_cast<double>(spread) / (static_cast<double>(n) * static_cast<double>(n - 1));
  r.std_error = std::sqrt(var / static_cast<double>(n));
  r.ci_lo = r.mean - 1.96 * r.std_error;
  r.ci_hi = r.mean + 1.96 * r.std_error;
  r.samples_used = n;
  r.degenerate_resampled = degenerate_resampled;
  return r;
}

SampleValues interior_sample_values(const Body2& body, const Counter& counter, std::size_t n,
                                    std::uint64_t seed, const SamplingOptions& opts) {
  // Fail fast on unsupported combinations before sampling.
  if (counter.kind != CounterKind::Normals) {
    try {
      evaluate_counter(body, counter, centroid2(body));
    } catch (const GeometryError& e) {
      if (e.kind() == ErrorKind::Unsupported || e.kind() == ErrorKind::Validation) throw;
    }
  }
  const BBox2 box = opts.box ? *opts.box : bounding_box(body);
  return run_samples(
      n, seed, opts, [&](SampleStream& s) { return draw_interior(body, box, s); },
      [&](Point2 p) { return evaluate_counter(body, counter, p); });
}

EstimateReport estimate_interior_average(const Body2& body, const Counter& counter, std::size_t n,
                                         std::uint64_t seed, const SamplingOptions& opts) {
  const SampleValues v = interior_sample_values(body, counter, n, seed, opts);
  EstimateReport r = summarize(v.values, v.degenerate_resampled);
  if (counter.kind == CounterKind::Normals) r.exact = exact_normals(body);
  if (counter.kind == CounterKind::Diameters && std::holds_alternative<SmoothBody2>(body)) {
    const auto& sm = std::get<SmoothBody2>(body);
    if (is_round(sm)) r.exact = 1.0;
  }
  return r;
}

EstimateReport estimate_interior_average(const Polytope3& body, const Counter& counter, std::size_t n,
                                         std::uint64_t seed, const SamplingOptions& opts) {
  if (counter.kind != CounterKind::Normals)
    fail(ErrorKind::Unsupported, std::string(to_string(counter.kind)) + " counter is not available for polytopes");
  const BBox3 box = bounding_box(body);
  const SampleValues v = run_samples(
      n, seed, opts, [&](SampleStream& s) { return draw_interior(body, box, s); },
      [&](Vec3 p) {
        const NormalCount3 c = count_normals3(body, p, false);
        return PointCount{c.count, c.on_wedge_boundary};
      });
  return summarize(v.values, v.degenerate_resampled);
}

EstimateReport estimate_boundary_average(const Body2& body, const Counter& counter, std::size_t n,
                                         std::uint64_t seed, const SamplingOptions& opts) {
  const double eps = opts.boundary_epsilon * inner_radius(body);
  const SampleValues v = run_samples(
      n, seed, opts,
      [&](SampleStream& s) {
        const BoundarySample b = draw_boundary2(body, s);
        return b.point - eps * polar(b.normal_angle);
      },
      [&](Point2 p) {
        // Offsets that leave the body near a polygon corner are redrawn.
        if (!contains2(body, p, 0.0)) return PointCount{0, true};
        return evaluate_counter(body, counter, p);
      });
  return summarize(v.values, v.degenerate_resampled);
}

EstimateReport average_diameters(const Body2& body, std::size_t n, std::uint64_t seed, const SamplingOptions& opts) {
  return estimate_interior_average(body, Counter{CounterKind::Diameters, nullptr}, n, seed, opts);
}

FieldMap field_map(const Body2& body, int nx, int ny, const Counter& counter, const SamplingOptions& opts) {
  if (nx < 2 || ny < 2) fail(ErrorKind::Validation, "field grid must be at least 2x2");
  FieldMap m;
  m.nx = nx;
  m.ny = ny;
  m.box = bounding_box(body);
  m.values.assign(static_cast<std::size_t>(nx) * ny, kFieldOutside);
  const double dx = (m.box.xmax - m.box.xmin) / nx, dy = (m.box.ymax - m.box.ymin) / ny;
  parallel_for(m.values.size(), worker_count(opts, m.values.size()), [&](std::size_t k) {
    const int ix = static_cast<int>(k % nx), iy = static_cast<int>(k / nx);
    const Point2 p{m.box.xmin + (ix + 0.5) * dx, m.box.ymin + (iy + 0.5) * dy};
    if (!contains2(body, p, -1e-12)) return;
    try {
      const PointCount c = evaluate_counter(body, counter, p);
      m.values[k] = c.degenerate ? kFieldDegenerate : c.value;
    } catch (const GeometryError& e) {
      if (e.kind() != ErrorKind::DegenerateBody) throw;
      m.values[k] = kFieldDegenerate;
    }
  });
  return m;
}

}  // namespace cvxn
