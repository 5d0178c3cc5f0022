#include "convexnormals/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "convexnormals/errors.hpp"
#include "convexnormals/periodic_roots.hpp"

namespace cvxn {

NormBall2 NormBall2::create(Body2 body) {
  if (const auto* sm = std::get_if<SmoothBody2>(&body)) {
    for (int k = 1; k <= sm->degree(); k += 2) {
      if (std::abs(sm->cos_coeffs()[k - 1]) > 1e-10 || std::abs(sm->sin_coeffs()[k - 1]) > 1e-10)
        fail(ErrorKind::Domain, "norm ball must be centrally symmetric (odd harmonics present)");
    }
  } else if (const auto* poly = std::get_if<Polygon2>(&body)) {
    const std::size_t n = poly->size();
    double scale = 0.0;
    for (const auto& v : poly->vertices()) scale = std::max(scale, norm(v));
    bool ok = n % 2 == 0;
    for (std::size_t i = 0; ok && i < n / 2; ++i)
      ok = norm(poly->vertex(i) + poly->vertex(i + n / 2)) <= 1e-10 * scale;
    if (!ok) fail(ErrorKind::Domain, "norm ball polygon must be symmetric under negation");
  } else {
    fail(ErrorKind::Unsupported, "norm balls must be smooth Fourier bodies or polygons");
  }
  NormBall2 m(std::move(body));
  m.area_ = measure2d(m.body_).area;
  return m;
}

const SmoothBody2& NormBall2::smooth_body() const {
  if (!smooth()) fail(ErrorKind::Unsupported, "operation needs a smooth strictly convex norm ball");
  return std::get<SmoothBody2>(body_);
}

namespace {

double boundary_angle(const SmoothBody2& m, double t) {
  const Point2 r = m.point(t);
  return std::atan2(r.y, r.x);
}

// Radial function of a smooth ball: the boundary point in direction alpha,
// located by bisection on the normal angle (polar angle is monotone in it).
Point2 radial_point(const SmoothBody2& m, double alpha) {
  // Bracket with the normal angle alpha itself; the polar angle of r(t)
  // differs from t by less than pi/2.
  double lo = alpha - 0.5 * kPi, hi = alpha + 0.5 * kPi;
  auto offset = [&](double t) { return wrap_angle(boundary_angle(m, t) - alpha + kPi) - kPi; };
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (offset(mid) < 0.0) lo = mid; else hi = mid;
  }
  return m.point(0.5 * (lo + hi));
}

}  // namespace

double NormBall2::gauge(Vec2 x) const {
  const double nx = norm(x);
  if (nx == 0.0) return 0.0;
  if (const auto* poly = std::get_if<Polygon2>(&body_)) {
    double g = 0.0;
    for (std::size_t i = 0; i < poly->size(); ++i) {
      const Vec2 out = -poly->inward_normal(i);
      g = std::max(g, dot(x, out) / dot(poly->vertex(i), out));
    }
    return g;
  }
  const Point2 r = radial_point(std::get<SmoothBody2>(body_), std::atan2(x.y, x.x));
  return nx / norm(r);
}

Point2 NormBall2::boundary(double s) const {
  s -= std::floor(s);
  if (const auto* poly = std::get_if<Polygon2>(&body_)) {
    double total = 0.0;
    for (std::size_t i = 0; i < poly->size(); ++i) total += norm(poly->edge(i));
    double rest = s * total;
    for (std::size_t i = 0; i < poly->size(); ++i) {
      const double len = norm(poly->edge(i));
      if (rest <= len) return poly->vertex(i) + (rest / len) * poly->edge(i);
      rest -= len;
    }
    return poly->vertex(0);
  }
  return std::get<SmoothBody2>(body_).point(kTwoPi * s);
}

Vec2 birkhoff_direction(const NormBall2& M, double phi) {
  return unit(M.smooth_body().point(phi - 0.5 * kPi));
}

NormalCount count_minkowski_normals(const NormBall2& M, const SmoothBody2& K, Point2 p, bool check_inside) {
  const SmoothBody2& ball = M.smooth_body();
  if (check_inside && !(K.support_margin(p) > 1e-12 * K.a0())) {
    std::ostringstream os;
    os << "query point (" << p.x << ", " << p.y << ") is not strictly inside the body";
    fail(ErrorKind::Domain, os.str());
  }
  // The tangent of K at normal angle t has direction t + pi/2, so its
  // Birkhoff normal points to r_M(t). F(t) = cross(p - r_K, r_M);
  // F' = cross(-rho_K T, r_M) + cross(p - r_K, rho_M T).
  auto value = [&](Vec2 u, double hk, double dhk, double rhok, double hm, double dhm, double rhom) {
    const Vec2 T = perp(u);
    const Point2 rk = hk * u + dhk * T, rm = hm * u + dhm * T;
    return PeriodicSample{cross(p - rk, rm), cross(-rhok * T, rm) + cross(p - rk, rhom * T)};
  };
  auto eval = [&](double t) {
    const SupportJet jk = K.jet(t), jm = ball.jet(t);
    return value(polar(t), jk.h, jk.dh, jk.rho(), jm.h, jm.dh, jm.rho());
  };
  auto tabulate = [&](int n, std::vector<double>& f, std::vector<double>& df) {
    SupportGrid lk, lm;
    const SupportGrid* gk = &K.grid();
    const SupportGrid* gm = &ball.grid();
    if (n != gk->size) {
      lk = K.make_grid(n);
      lm = ball.make_grid(n);
      gk = &lk;
      gm = &lm;
    }
    f.resize(n);
    df.resize(n);
    for (int j = 0; j < n; ++j) {
      const PeriodicSample s = value({gk->cos_t[j], gk->sin_t[j]}, gk->h[j], gk->dh[j], gk->h[j] + gk->d2h[j],
                                     gm->h[j], gm->dh[j], gm->h[j] + gm->d2h[j]);
      f[j] = s.f;
      df[j] = s.df;
    }
  };
  const RootScan scan = scan_periodic_adaptive(SmoothBody2::kCheckGrid, tabulate, eval,
                                               kEvoluteTolerance * K.a0() * ball.a0());
  NormalCount c;
  c.infinite = scan.identically_zero;
  for (const auto& x : scan.crossings) {
    if (x.direction < 0) ++c.stable;
    else if (x.direction > 0) ++c.unstable;
    else ++c.degenerate;
  }
  return c;
}

namespace {

// Second hexagon vertex v(u) on the boundary, counterclockwise from u, with
// ||v - u||_M = 1. The gauge grows from 0 at v = u to 2 at v = -u.
Point2 second_vertex(const NormBall2& M, double su) {
  double lo = su, hi = su + 0.5;
  const Point2 u = M.boundary(su);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (M.gauge(M.boundary(mid) - u) < 1.0) lo = mid; else hi = mid;
  }
  return M.boundary(0.5 * (lo + hi));
}

double hexagon_area(const NormBall2& M, double su, Point2* u_out = nullptr, Point2* v_out = nullptr) {
  const Point2 u = M.boundary(su);
  const Point2 v = second_vertex(M, su);
  if (u_out) *u_out = u;
  if (v_out) *v_out = v;
  return 3.0 * std::abs(cross(u, v));
}

}  // namespace

HexagonSearch largest_affine_hexagon(const NormBall2& M) {
  // Starting at -u gives the same hexagon, so half the boundary suffices.
  constexpr int kGrid = 720;
  double best = -1.0, best_s = 0.0;
  for (int j = 0; j < kGrid; ++j) {
    const double s = 0.5 * j / kGrid;
    const double a = hexagon_area(M, s);
    if (a > best) {
      best = a;
      best_s = s;
    }
  }
  const double step = 0.5 / kGrid;
  double lo = best_s - step, hi = best_s + step;
  constexpr double kGold = 0.6180339887498949;
  double x1 = hi - kGold * (hi - lo), x2 = lo + kGold * (hi - lo);
  double f1 = hexagon_area(M, x1), f2 = hexagon_area(M, x2);
  while (hi - lo > 1e-12) {
    if (f1 > f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - kGold * (hi - lo); f1 = hexagon_area(M, x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + kGold * (hi - lo); f2 = hexagon_area(M, x2);
    }
  }
  const double s_star = f1 > best || f2 > best ? (f1 > f2 ? x1 : x2) : best_s;
  HexagonSearch h;
  h.hexagon_area = hexagon_area(M, s_star, &h.u, &h.v);
  h.tau = h.hexagon_area / M.area();
  return h;
}

double hexagon_ratio_tau(const NormBall2& M) { return largest_affine_hexagon(M).tau; }

double normed_width_bound(const NormBall2& M) { return 6.0 / (3.0 - 2.0 * hexagon_ratio_tau(M)); }

}  // namespace cvxn
