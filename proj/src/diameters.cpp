#include "convexnormals/diameters.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "convexnormals/errors.hpp"
#include "convexnormals/normals.hpp"
#include "convexnormals/periodic_roots.hpp"

namespace cvxn {

namespace {

// Chord vector w(phi) = r(phi) - r(phi + pi): boundary of K - K traversed by
// outer normal angle, so its direction turns monotonically with phi.
Vec2 chord_vector(const SmoothBody2& body, double phi) { return body.point(phi) - body.point(phi + kPi); }

}  // namespace

DiameterChord diameter_chord(const SmoothBody2& body, double theta) {
  const Vec2 dir = polar(theta);
  auto f = [&](double phi) { return cross(dir, chord_vector(body, phi)); };
  constexpr int kGrid = 1024;
  const double step = kTwoPi / kGrid;
  double lo = 0.0, hi = 0.0;
  bool found = false;
  double prev = f(0.0);
  for (int j = 1; j <= kGrid && !found; ++j) {
    const double t = j * step;
    const double cur = f(t);
    // Rising crossing of cross(dir, w): w turns counterclockwise through +dir.
    if (prev < 0.0 && cur >= 0.0 && dot(dir, chord_vector(body, t)) > 0.0) {
      lo = t - step;
      hi = t;
      found = true;
    }
    prev = cur;
  }
  if (!found) fail(ErrorKind::Convexity, "no affine diameter found; body is not strictly convex");
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0) lo = mid; else hi = mid;
  }
  const double phi = 0.5 * (lo + hi);
  DiameterChord c;
  c.a = body.point(phi + kPi);
  c.b = body.point(phi);
  c.direction_angle = wrap_angle(theta);
  c.length = norm(c.b - c.a);
  c.normal_angle = wrap_angle(phi + kPi);
  return c;
}

std::vector<ThetaSweepRow> theta_sweep(const SmoothBody2& body, int grid) {
  std::vector<ThetaSweepRow> rows(grid);
  for (int j = 0; j < grid; ++j) {
    const double t = kTwoPi * j / grid;
    rows[j] = {t, diameter_chord(body, t).length};
  }
  return rows;
}

double half_square_integral(const SmoothBody2& body, int grid) {
  double s = 0.0;
  for (const auto& r : theta_sweep(body, grid)) s += r.length * r.length;
  return 0.5 * s * kTwoPi / grid;
}

DiameterCount count_diameters_smooth(const SmoothBody2& body, Point2 p, bool check_inside) {
  if (check_inside && !(body.support_margin(p) > 1e-12 * body.a0())) {
    std::ostringstream os;
    os << "query point (" << p.x << ", " << p.y << ") is not strictly inside the body";
    fail(ErrorKind::Domain, os.str());
  }
  // f = cross(p - a, b - a), a = r(phi), b = r(phi + pi); a' = rho(phi) T,
  // b' = -rho(phi + pi) T with T = perp(u(phi)).
  auto value = [&](Point2 a, Point2 b, Vec2 T, double rho_a, double rho_b) -> PeriodicSample {
    const Vec2 da = rho_a * T, db = -rho_b * T;
    return {cross(p - a, b - a), cross(-1.0 * da, b - a) + cross(p - a, db - da)};
  };
  auto eval = [&](double phi) {
    const SupportJet ja = body.jet(phi), jb = body.jet(phi + kPi);
    const Vec2 u = polar(phi), T = perp(u);
    const Point2 a = ja.h * u + ja.dh * T;
    const Point2 b = -jb.h * u - jb.dh * T;
    return value(a, b, T, ja.rho(), jb.rho());
  };
  auto tabulate = [&](int n, std::vector<double>& f, std::vector<double>& df) {
    SupportGrid local;
    const SupportGrid* g = &body.grid();
    if (n != g->size) {
      local = body.make_grid(n);
      g = &local;
    }
    f.resize(n);
    df.resize(n);
    const int half = n / 2;
    for (int j = 0; j < n; ++j) {
      const int k = (j + half) % n;
      const Vec2 u{g->cos_t[j], g->sin_t[j]}, T = perp(u);
      const Point2 a = g->h[j] * u + g->dh[j] * T;
      const Point2 b = -g->h[k] * u - g->dh[k] * T;
      const PeriodicSample s = value(a, b, T, g->h[j] + g->d2h[j], g->h[k] + g->d2h[k]);
      f[j] = s.f;
      df[j] = s.df;
    }
  };
  const double scale = body.a0();
  const RootScan scan =
      scan_periodic_adaptive(SmoothBody2::kCheckGrid, tabulate, eval, kEvoluteTolerance * scale * scale);
  DiameterCount c;
  if (scan.identically_zero) {
    c.degenerate = true;
    c.infinite = true;
    return c;
  }
  int crossings = 0;
  for (const auto& x : scan.crossings) {
    if (x.degenerate()) c.degenerate = true;
    else ++crossings;
  }
  c.count = crossings / 2;
  return c;
}

std::vector<AntipodalPair> antipodal_pairs(const Polygon2& poly) {
  const std::size_t n = poly.size();
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, norm(poly.edge(i)));
  std::vector<AntipodalPair> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 in = poly.inward_normal(i);
    // Farthest vertices from edge i along the inward normal.
    double best = -1.0;
    for (std::size_t k = 0; k < n; ++k) best = std::max(best, dot(poly.vertex(k) - poly.vertex(i), in));
    std::vector<std::size_t> far;
    for (std::size_t k = 0; k < n; ++k)
      if (dot(poly.vertex(k) - poly.vertex(i), in) >= best - 1e-12 * scale) far.push_back(k);
    if (far.size() == 1) {
      out.push_back({far[0], i, false});
    } else {
      // Two farthest vertices span the parallel edge; report each pair once.
      std::size_t j = far[0];
      if ((far[0] + 1) % n != far[1]) j = far[1];
      if (i < j) out.push_back({j, i, true});
    }
  }
  return out;
}

namespace {

// Signed distances of p to the sides of the counterclockwise triangle/quad.
double min_side_margin(const std::vector<Point2>& pts, Point2 p) {
  double m = std::numeric_limits<double>::infinity();
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e = pts[(i + 1) % n] - pts[i];
    m = std::min(m, cross(e, p - pts[i]) / norm(e));
  }
  return m;
}

}  // namespace

DiameterCount count_diameters_polygon(const Polygon2& poly, Point2 p, bool check_inside) {
  if (check_inside && !contains2(poly, p, -1e-12)) {
    std::ostringstream os;
    os << "query point (" << p.x << ", " << p.y << ") is not strictly inside the polygon";
    fail(ErrorKind::Domain, os.str());
  }
  double scale = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) scale = std::max(scale, norm(poly.edge(i)));
  const double tol = 1e-10 * scale;
  DiameterCount c;
  for (const auto& pair : antipodal_pairs(poly)) {
    std::vector<Point2> region;
    if (pair.parallel) {
      const std::size_t i = pair.edge, j = pair.vertex;
      region = {poly.vertex(i), poly.vertex(i + 1), poly.vertex(j), poly.vertex(j + 1)};
    } else {
      region = {poly.vertex(pair.edge), poly.vertex(pair.edge + 1), poly.vertex(pair.vertex)};
    }
    const double m = min_side_margin(region, p);
    if (m < -tol) continue;
    if (m <= tol) {
      c.degenerate = true;
      continue;
    }
    if (pair.parallel) {
      c.infinite = true;
      c.edge_a = pair.edge;
      c.edge_b = pair.vertex;
    } else {
      ++c.count;
    }
  }
  return c;
}

}  // namespace cvxn
