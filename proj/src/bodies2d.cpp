#include "convexnormals/bodies2d.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

#include "convexnormals/errors.hpp"
#include "convexnormals/rng.hpp"

namespace cvxn {

namespace {

double extent(std::span<const Point2> pts) {
  double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
  for (const auto& p : pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  return std::max(xmax - xmin, ymax - ymin);
}

}  // namespace

// ---------------------------------------------------------------- Polygon2

Polygon2 Polygon2::from_points(std::span<const Point2> points) {
  if (points.size() < 3) fail(ErrorKind::DegenerateBody, "polygon needs at least 3 points");
  std::vector<Point2> pts(points.begin(), points.end());
  for (const auto& p : pts) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      fail(ErrorKind::DegenerateBody, "non-finite polygon coordinate");
  }
  std::sort(pts.begin(), pts.end(),
            [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const double scale = extent(pts);
  const double tol = 1e-12 * scale * scale;
  if (pts.size() < 3 || scale == 0.0)
    fail(ErrorKind::DegenerateBody, "fewer than 3 distinct points");

  // Andrew's monotone chain; near-collinear points are popped.
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= tol) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= tol) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) fail(ErrorKind::DegenerateBody, "convex hull has fewer than 3 vertices");
  return from_ccw(std::move(hull));
}

Polygon2 Polygon2::from_ccw(std::vector<Point2> v) {
  if (v.size() < 3) fail(ErrorKind::DegenerateBody, "polygon needs at least 3 vertices");
  const double scale = extent(v);
  const double tol = 1e-12 * scale * scale;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 e0 = v[(i + 1) % n] - v[i];
    Vec2 e1 = v[(i + 2) % n] - v[(i + 1) % n];
    if (!(cross(e0, e1) > tol)) {
      std::ostringstream os;
      os << "polygon is not strictly convex at vertex " << (i + 1) % n;
      fail(ErrorKind::Convexity, os.str());
    }
  }
  // Total turning must be one full turn (rejects self-overlapping star shapes).
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 e0 = v[(i + 1) % n] - v[i];
    Vec2 e1 = v[(i + 2) % n] - v[(i + 1) % n];
    turning += std::atan2(cross(e0, e1), dot(e0, e1));
  }
  if (std::abs(turning - kTwoPi) > 1e-6) fail(ErrorKind::Convexity, "polygon winds more than once");
  return Polygon2(std::move(v));
}

Polygon2 Polygon2::transformed(double a, double b, double c, double d, Vec2 shift) const {
  std::vector<Point2> out;
  out.reserve(vertices_.size());
  for (const auto& p : vertices_) out.push_back({a * p.x + b * p.y + shift.x, c * p.x + d * p.y + shift.y});
  if (a * d - b * c < 0.0) std::reverse(out.begin(), out.end());
  return from_ccw(std::move(out));
}

double shoelace_area(std::span<const Point2> v) {
  if (v.size() < 3) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
  return 0.5 * s;
}

std::vector<Point2> minkowski_sum(const Polygon2& a, const Polygon2& b) {
  auto lowest = [](const Polygon2& p) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < p.size(); ++i) {
      Point2 v = p.vertex(i), w = p.vertex(best);
      if (v.y < w.y || (v.y == w.y && v.x < w.x)) best = i;
    }
    return best;
  };
  const std::size_t na = a.size(), nb = b.size();
  std::size_t ia = lowest(a), ib = lowest(b);
  std::vector<Point2> out;
  out.reserve(na + nb);
  std::size_t i = 0, j = 0;
  while (i < na || j < nb) {
    out.push_back(a.vertex(ia + i) + b.vertex(ib + j));
    if (i == na) { ++j; continue; }
    if (j == nb) { ++i; continue; }
    double c = cross(a.edge(ia + i), b.edge(ib + j));
    if (c > 0.0) ++i;
    else if (c < 0.0) ++j;
    else { ++i; ++j; }
  }
  return out;
}

// ------------------------------------------------------------- SmoothBody2

namespace {

struct Harmonics {
  // cos(k t), sin(k t) for k = 1..n by angle addition.
  template <class F>
  static void for_each(double theta, int n, F&& f) {
    const double c1 = std::cos(theta), s1 = std::sin(theta);
    double ck = c1, sk = s1;
    for (int k = 1; k <= n; ++k) {
      f(k, ck, sk);
      const double cn = ck * c1 - sk * s1;
      sk = sk * c1 + ck * s1;
      ck = cn;
    }
  }
};

SupportGrid build_grid(double a0, const std::vector<double>& ca, const std::vector<double>& sb,
                       int size) {
  SupportGrid g;
  g.size = size;
  g.step = kTwoPi / size;
  g.cos_t.resize(size);
  g.sin_t.resize(size);
  g.h.resize(size);
  g.dh.resize(size);
  g.d2h.resize(size);
  const int n = static_cast<int>(ca.size());
  for (int j = 0; j < size; ++j) {
    const double t = j * g.step;
    g.cos_t[j] = std::cos(t);
    g.sin_t[j] = std::sin(t);
    double h = a0, dh = 0.0, d2h = 0.0;
    Harmonics::for_each(t, n, [&](int k, double ck, double sk) {
      const double a = ca[k - 1], b = sb[k - 1];
      h += a * ck + b * sk;
      dh += k * (-a * sk + b * ck);
      d2h -= static_cast<double>(k) * k * (a * ck + b * sk);
    });
    g.h[j] = h;
    g.dh[j] = dh;
    g.d2h[j] = d2h;
  }
  return g;
}

}  // namespace

SmoothBody2 SmoothBody2::create(double a0, std::vector<double> cos_coeffs,
                                std::vector<double> sin_coeffs) {
  const std::size_t n = std::max(cos_coeffs.size(), sin_coeffs.size());
  cos_coeffs.resize(n, 0.0);
  sin_coeffs.resize(n, 0.0);
  // Trailing zero harmonics carry no information.
  while (!cos_coeffs.empty() && cos_coeffs.back() == 0.0 && sin_coeffs.back() == 0.0) {
    cos_coeffs.pop_back();
    sin_coeffs.pop_back();
  }
  if (!std::isfinite(a0)) fail(ErrorKind::Convexity, "non-finite support coefficient");
  SmoothBody2 body;
  body.a0_ = a0;
  body.cos_ = std::move(cos_coeffs);
  body.sin_ = std::move(sin_coeffs);
  auto grid = std::make_shared<SupportGrid>(build_grid(body.a0_, body.cos_, body.sin_, kCheckGrid));
  double min_rho = grid->h[0] + grid->d2h[0];
  int arg = 0;
  for (int j = 1; j < grid->size; ++j) {
    const double r = grid->h[j] + grid->d2h[j];
    if (r < min_rho) { min_rho = r; arg = j; }
  }
  body.min_rho_ = min_rho;
  body.min_rho_angle_ = arg * grid->step;
  body.grid_ = std::move(grid);
  if (!(min_rho > kMinRho)) {
    std::ostringstream os;
    os << "support function is not convex: rho = " << min_rho << " at theta = "
       << body.min_rho_angle_;
    fail(ErrorKind::Convexity, os.str());
  }
  double d3 = 0.0;
  for (int k = 1; k <= body.degree(); ++k)
    d3 += std::pow(static_cast<double>(k), 3) * (std::abs(body.cos_[k - 1]) + std::abs(body.sin_[k - 1]));
  body.d3_bound_ = d3;
  double d2 = std::abs(a0);
  for (int k = 1; k <= body.degree(); ++k)
    d2 += static_cast<double>(k) * k * (std::abs(body.cos_[k - 1]) + std::abs(body.sin_[k - 1]));
  body.d2_bound_ = d2;
  body.coarse_ = std::make_shared<SupportGrid>(build_grid(body.a0_, body.cos_, body.sin_, kCoarseGrid));
  // Between grid nodes h moves by at most step * max|h'|; the body lies
  // between the disks of radius min h and max h about the origin.
  double d1 = 0.0;
  for (int k = 1; k <= body.degree(); ++k) d1 += k * (std::abs(body.cos_[k - 1]) + std::abs(body.sin_[k - 1]));
  const auto& g = *body.grid_;
  const auto [hmin, hmax] = std::minmax_element(g.h.begin(), g.h.end());
  const double slack = g.step * d1 + 1e-12 * std::abs(a0);
  body.inner_disk_ = std::max(0.0, (*hmin - slack) * (1.0 - 1e-9));
  body.outer_disk_ = (*hmax + slack) * (1.0 + 1e-9);
  return body;
}

SmoothBody2 SmoothBody2::disk(double radius, Point2 center) {
  if (!(radius > 0.0)) fail(ErrorKind::DegenerateBody, "disk radius must be positive");
  if (center.x == 0.0 && center.y == 0.0) return create(radius, {}, {});
  return create(radius, {center.x}, {center.y});
}

SupportJet SmoothBody2::jet(double theta) const {
  SupportJet j{a0_, 0.0, 0.0};
  Harmonics::for_each(theta, degree(), [&](int k, double ck, double sk) {
    const double a = cos_[k - 1], b = sin_[k - 1];
    j.h += a * ck + b * sk;
    j.dh += k * (-a * sk + b * ck);
    j.d2h -= static_cast<double>(k) * k * (a * ck + b * sk);
  });
  return j;
}

double SmoothBody2::d3h(double theta) const {
  double s = 0.0;
  Harmonics::for_each(theta, degree(), [&](int k, double ck, double sk) {
    s += std::pow(static_cast<double>(k), 3) * (cos_[k - 1] * sk - sin_[k - 1] * ck);
  });
  return s;
}

Point2 SmoothBody2::point(double theta) const {
  const SupportJet j = jet(theta);
  const Vec2 u = polar(theta);
  return j.h * u + j.dh * perp(u);
}

Point2 SmoothBody2::centre_of_curvature(double theta) const {
  const SupportJet j = jet(theta);
  const Vec2 u = polar(theta);
  return -j.d2h * u + j.dh * perp(u);
}

SupportGrid SmoothBody2::make_grid(int size) const {
  if (size == kCheckGrid) return *grid_;
  return build_grid(a0_, cos_, sin_, size);
}

double SmoothBody2::support_margin(Point2 p) const {
  // m(t) = h(t) - <p, u(t)> has |m''| <= B = |h| + |h''| + |p|. Coarse cells
  // whose lower bound min(m_j, m_k) - B step^2 / 8 beats the refined minimum
  // are refined too; too many candidates fall back to the fine grid.
  auto refine = [&](double t, double step, double value) {
    double lo = t - step, hi = t + step;
    double best = value;
    for (int it = 0; it < 8; ++it) {
      const SupportJet s = jet(t);
      const double c = std::cos(t), sn = std::sin(t);
      const double f = s.h - p.x * c - p.y * sn;
      best = std::min(best, f);
      const double d1 = s.dh + p.x * sn - p.y * c;
      const double d2 = s.d2h + p.x * c + p.y * sn;
      if (d1 > 0.0) hi = t; else lo = t;
      double next = (d2 > 0.0) ? t - d1 / d2 : 0.5 * (lo + hi);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::abs(next - t) < 1e-15) break;
      t = next;
    }
    const SupportJet s = jet(t);
    return std::min(best, s.h - p.x * std::cos(t) - p.y * std::sin(t));
  };

  const SupportGrid& cg = *coarse_;
  const int n = cg.size;
  std::array<double, kCoarseGrid> m{};
  int arg = 0;
  for (int j = 0; j < n; ++j) {
    m[j] = cg.h[j] - p.x * cg.cos_t[j] - p.y * cg.sin_t[j];
    if (m[j] < m[arg]) arg = j;
  }
  double best = refine(arg * cg.step, cg.step, m[arg]);
  const double dip = (d2_bound_ + norm(p)) * cg.step * cg.step / 8.0;
  int candidates[8];
  int count = 0;
  bool overflow = false;
  for (int j = 0; j < n && !overflow; ++j) {
    const int k = j + 1 < n ? j + 1 : 0;
    if (j == arg || k == arg) continue;
    if (std::min(m[j], m[k]) - dip < best) {
      if (count == 8) overflow = true; else candidates[count++] = j;
    }
  }
  if (!overflow) {
    for (int c = 0; c < count; ++c) {
      const int j = candidates[c];
      const int k = j + 1 < n ? j + 1 : 0;
      const int start = m[j] <= m[k] ? j : k;
      best = std::min(best, refine(start * cg.step, cg.step, m[start]));
    }
    return best;
  }

  const SupportGrid& g = *grid_;
  double best0 = std::numeric_limits<double>::infinity(), best1 = best0;
  int j0 = 0, j1 = 0;
  for (int j = 0; j < g.size; ++j) {
    const double v = g.h[j] - p.x * g.cos_t[j] - p.y * g.sin_t[j];
    if (v < best0) {
      best1 = best0; j1 = j0;
      best0 = v; j0 = j;
    } else if (v < best1) {
      best1 = v; j1 = j;
    }
  }
  double r = refine(j0 * g.step, g.step, best0);
  if (best1 - best0 < 1e-4 * std::max(1.0, std::abs(a0_))) r = std::min(r, refine(j1 * g.step, g.step, best1));
  return std::min(r, best);
}

SmoothBody2 SmoothBody2::offset(double t) const {
  return create(a0_ + t, cos_, sin_);
}

SmoothBody2 SmoothBody2::scaled(double lambda) const {
  std::vector<double> c = cos_, s = sin_;
  for (auto& v : c) v *= lambda;
  for (auto& v : s) v *= lambda;
  return create(a0_ * lambda, std::move(c), std::move(s));
}

// ---------------------------------------------------------------- ArcBody2

ArcBody2 ArcBody2::create(std::vector<Arc> arcs) {
  if (arcs.empty()) fail(ErrorKind::DegenerateBody, "arc body needs at least one arc");
  double scale = 0.0;
  for (const auto& a : arcs) {
    if (!(a.radius > 0.0)) fail(ErrorKind::DegenerateBody, "arc radius must be positive");
    if (!(a.span > 0.0)) fail(ErrorKind::DegenerateBody, "arc span must be positive");
    scale = std::max(scale, a.radius + norm(a.center));
  }
  ArcBody2 body;
  const std::size_t n = arcs.size();
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Arc& a = arcs[i];
    const Arc& b = arcs[(i + 1) % n];
    turning += a.span;
    if (norm(a.last() - b.first()) > 1e-9 * scale) {
      std::ostringstream os;
      os << "arc " << i << " does not end where arc " << (i + 1) % n << " starts";
      fail(ErrorKind::Validation, os.str());
    }
    double gap = wrap_angle(b.start - (a.start + a.span));
    if (gap > kTwoPi - 1e-12) gap = 0.0;
    if (gap >= kPi) fail(ErrorKind::Convexity, "outer normal angle decreases at an arc junction");
    turning += gap;
    if (gap > 1e-12) body.corners_.push_back({a.last(), a.start + a.span, gap, i});
  }
  if (std::abs(turning - kTwoPi) > 1e-9) fail(ErrorKind::Convexity, "arc boundary does not turn exactly once");
  body.arcs_ = std::move(arcs);
  return body;
}

double ArcBody2::support(double theta) const {
  const Vec2 u = polar(theta);
  return dot(support_point(theta), u);
}

Point2 ArcBody2::support_point(double theta) const {
  for (const auto& a : arcs_) {
    if (angle_in_range(theta, a.start, a.span, 1e-15)) return a.point_at(theta);
  }
  for (const auto& c : corners_) {
    if (angle_in_range(theta, c.cone_start, c.cone_span, 1e-15)) return c.vertex;
  }
  // Rounding gap: fall back to the best candidate.
  const Vec2 u = polar(theta);
  Point2 best = arcs_[0].first();
  for (const auto& a : arcs_) {
    for (Point2 q : {a.first(), a.last()}) {
      if (dot(q, u) > dot(best, u)) best = q;
    }
  }
  return best;
}

bool ArcBody2::constant_width(double* width) const {
  constexpr int kProbe = 720;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int j = 0; j < kProbe; ++j) {
    const double t = (j + 0.37) * kPi / kProbe;
    const double w = support(t) + support(t + kPi);
    lo = std::min(lo, w);
    hi = std::max(hi, w);
  }
  if (width) *width = 0.5 * (lo + hi);
  return hi - lo <= 1e-12 * std::max(1.0, hi);
}

// -------------------------------------------------------------- operations

Polygon2 build_polygon(std::span<const Point2> points) { return Polygon2::from_points(points); }

SupportFit fit_support_body(std::span<const std::pair<double, double>> samples, int degree) {
  if (degree < 0) fail(ErrorKind::Domain, "fit degree must be nonnegative");
  const int cols = 1 + 2 * degree;
  if (static_cast<int>(samples.size()) < cols)
    fail(ErrorKind::Domain, "not enough samples for the requested degree");
  Eigen::MatrixXd a(samples.size(), cols);
  Eigen::VectorXd rhs(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double t = samples[i].first;
    a(i, 0) = 1.0;
    for (int k = 1; k <= degree; ++k) {
      a(i, 2 * k - 1) = std::cos(k * t);
      a(i, 2 * k) = std::sin(k * t);
    }
    rhs(i) = samples[i].second;
  }
  const Eigen::VectorXd x = a.colPivHouseholderQr().solve(rhs);
  std::vector<double> c(degree), s(degree);
  for (int k = 1; k <= degree; ++k) {
    c[k - 1] = x(2 * k - 1);
    s[k - 1] = x(2 * k);
  }
  SupportFit fit{SmoothBody2::create(x(0), std::move(c), std::move(s))};
  const Eigen::VectorXd r = a * x - rhs;
  fit.max_residual = r.cwiseAbs().maxCoeff();
  fit.rms_residual = std::sqrt(r.squaredNorm() / static_cast<double>(samples.size()));
  return fit;
}

SupportFit fit_ellipse(double a, double b, int degree) {
  if (!(a > 0.0 && b > 0.0)) fail(ErrorKind::DegenerateBody, "ellipse semi-axes must be positive");
  constexpr int kSamples = 512;
  std::vector<std::pair<double, double>> samples(kSamples);
  for (int j = 0; j < kSamples; ++j) {
    const double t = kTwoPi * j / kSamples;
    const double c = std::cos(t), s = std::sin(t);
    samples[j] = {t, std::sqrt(a * a * c * c + b * b * s * s)};
  }
  return fit_support_body(samples, degree);
}

ArcBody2 build_reuleaux(int sides, double width) {
  if (sides < 3 || sides % 2 == 0) fail(ErrorKind::Domain, "Reuleaux polygons need an odd side count >= 3");
  if (!(width > 0.0)) fail(ErrorKind::Domain, "width must be positive");
  const double circumradius = width / (2.0 * std::cos(kPi / (2.0 * sides)));
  const double half = kPi / (2.0 * sides);
  std::vector<std::pair<double, Arc>> arcs;
  for (int j = 0; j < sides; ++j) {
    const double phi = kPi / 2.0 + kTwoPi * j / sides;
    const Point2 v = circumradius * polar(phi);
    const double mid = wrap_angle(phi + kPi);
    arcs.push_back({mid, Arc{v, width, mid - half, 2.0 * half}});
  }
  std::sort(arcs.begin(), arcs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Arc> out;
  for (auto& a : arcs) out.push_back(a.second);
  return ArcBody2::create(std::move(out));
}

Measure2 measure2d(const Body2& body) {
  return std::visit(
      [](const auto& b) -> Measure2 {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Polygon2>) {
          double per = 0.0;
          for (std::size_t i = 0; i < b.size(); ++i) per += norm(b.edge(i));
          return {shoelace_area(b.vertices()), per};
        } else if constexpr (std::is_same_v<T, SmoothBody2>) {
          double area = kPi * b.a0() * b.a0();
          for (int k = 1; k <= b.degree(); ++k) {
            const double e = b.cos_coeffs()[k - 1] * b.cos_coeffs()[k - 1] +
                             b.sin_coeffs()[k - 1] * b.sin_coeffs()[k - 1];
            area += 0.5 * kPi * (1.0 - static_cast<double>(k) * k) * e;
          }
          return {area, kTwoPi * b.a0()};
        } else {
          double area = 0.0, per = 0.0;
          for (const auto& a : b.arcs()) {
            area += 0.5 * cross(a.first(), a.last());
            area += 0.5 * a.radius * a.radius * (a.span - std::sin(a.span));
            per += a.length();
          }
          return {area, per};
        }
      },
      body);
}

double body_scale(const Body2& body) { return measure2d(body).perimeter / kTwoPi; }

bool contains2(const Body2& body, Point2 p, double tol) {
  return std::visit(
      [&](const auto& b) -> bool {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Polygon2>) {
          const double s = norm(b.vertex(1) - b.vertex(0)) + norm(b.vertex(2) - b.vertex(1));
          for (std::size_t i = 0; i < b.size(); ++i) {
            const Vec2 e = b.edge(i);
            if (cross(e, p - b.vertex(i)) < -tol * norm(e) * s) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, SmoothBody2>) {
          const double r = norm(p);
          if (r < b.inner_disk_radius() - std::max(0.0, -tol) * std::max(1.0, std::abs(b.a0()))) return true;
          if (r > b.outer_disk_radius() + std::max(0.0, tol) * std::max(1.0, std::abs(b.a0()))) return false;
          return b.support_margin(p) >= -tol * std::max(1.0, std::abs(b.a0()));
        } else {
          for (const auto& a : b.arcs()) {
            const Vec2 chord = a.last() - a.first();
            const double len = norm(chord);
            if (len > 1e-12 * a.radius && cross(chord, p - a.first()) >= -tol * len * a.radius) continue;
            if (norm(p - a.center) <= a.radius * (1.0 + tol)) continue;
            return false;
          }
          return true;
        }
      },
      body);
}

double support2(const Body2& body, double theta) {
  return std::visit(
      [&](const auto& b) -> double {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Polygon2>) {
          const Vec2 u = polar(theta);
          double m = -std::numeric_limits<double>::infinity();
          for (const auto& v : b.vertices()) m = std::max(m, dot(v, u));
          return m;
        } else if constexpr (std::is_same_v<T, SmoothBody2>) {
          return b.h(theta);
        } else {
          return b.support(theta);
        }
      },
      body);
}

BBox2 bounding_box(const Body2& body) {
  if (const auto* poly = std::get_if<Polygon2>(&body)) {
    BBox2 box{poly->vertex(0).x, poly->vertex(0).x, poly->vertex(0).y, poly->vertex(0).y};
    for (const auto& v : poly->vertices()) {
      box.xmin = std::min(box.xmin, v.x);
      box.xmax = std::max(box.xmax, v.x);
      box.ymin = std::min(box.ymin, v.y);
      box.ymax = std::max(box.ymax, v.y);
    }
    return box;
  }
  return {-support2(body, kPi), support2(body, 0.0), -support2(body, 1.5 * kPi),
          support2(body, 0.5 * kPi)};
}

Point2 centroid2(const Body2& body) {
  return std::visit(
      [](const auto& b) -> Point2 {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Polygon2>) {
          double a = 0.0;
          Point2 c{};
          for (std::size_t i = 0; i < b.size(); ++i) {
            const Point2 p = b.vertex(i), q = b.vertex(i + 1);
            const double w = cross(p, q);
            a += w;
            c += w * (p + q);
          }
          return (1.0 / (3.0 * a)) * c;
        } else if constexpr (std::is_same_v<T, SmoothBody2>) {
          // C = (1/3A) int r h rho dtheta, trapezoid on the check grid (exact
          // up to rounding for trigonometric polynomials of this degree).
          const SupportGrid& g = b.grid();
          Point2 c{};
          for (int j = 0; j < g.size; ++j) {
            const Vec2 u{g.cos_t[j], g.sin_t[j]};
            const Point2 r = g.h[j] * u + g.dh[j] * perp(u);
            c += (g.h[j] * (g.h[j] + g.d2h[j])) * r;
          }
          c *= g.step / (3.0 * measure2d(Body2{b}).area);
          return c;
        } else {
          constexpr int kNodes = 2048;
          Point2 c{};
          for (const auto& a : b.arcs()) {
            const double dt = a.span / kNodes;
            for (int j = 0; j < kNodes; ++j) {
              const double t = a.start + (j + 0.5) * dt;
              const Point2 r = a.point_at(t);
              c += (a.radius * dot(r, polar(t)) * dt) * r;
            }
          }
          c *= 1.0 / (3.0 * measure2d(Body2{b}).area);
          return c;
        }
      },
      body);
}

double inner_radius(const Body2& body) {
  const Point2 c = centroid2(body);
  if (const auto* poly = std::get_if<Polygon2>(&body)) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly->size(); ++i)
      m = std::min(m, dot(c - poly->vertex(i), poly->inward_normal(i)));
    return m;
  }
  if (const auto* sm = std::get_if<SmoothBody2>(&body)) return sm->support_margin(c);
  constexpr int kProbe = 8192;
  double m = std::numeric_limits<double>::infinity();
  for (int j = 0; j < kProbe; ++j) {
    const double t = kTwoPi * j / kProbe;
    m = std::min(m, support2(body, t) - dot(c, polar(t)));
  }
  return m;
}

std::vector<Point2> sample_interior2(const Body2& body, std::size_t n, std::uint64_t seed) {
  const BBox2 box = bounding_box(body);
  std::vector<Point2> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    SampleStream stream(seed, i);
    out[i] = draw_interior(body, box, stream);
  }
  return out;
}

namespace {

// Arc length s(theta) = int_0^theta rho for a Fourier body.
double smooth_arc_length(const SmoothBody2& b, double theta) {
  double s = b.a0() * theta;
  for (int k = 1; k <= b.degree(); ++k) {
    const double a = b.cos_coeffs()[k - 1], c = b.sin_coeffs()[k - 1];
    s += (a * std::sin(k * theta) + c * (1.0 - std::cos(k * theta))) / k;
  }
  return s + b.jet(theta).dh - b.jet(0.0).dh;
}

}  // namespace

double smooth_arc_length_at(const SmoothBody2& b, double theta) { return smooth_arc_length(b, theta); }

double smooth_angle_at_arc_length(const SmoothBody2& b, double s) {
  const double total = kTwoPi * b.a0();
  s = std::clamp(s, 0.0, total);
  // Safeguarded Newton: s'(theta) = rho > 0.
  double lo = 0.0, hi = kTwoPi;
  double t = s / b.a0();
  for (int it = 0; it < 100; ++it) {
    const double f = smooth_arc_length(b, t) - s;
    if (f < 0) lo = t; else hi = t;
    double next = t - f / b.rho(t);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - t) < 1e-15 || hi - lo < 1e-14) return next;
    t = next;
  }
  return t;
}

BoundarySample draw_boundary2(const Body2& body, SampleStream& stream) {
  return std::visit(
      [&](const auto& b) -> BoundarySample {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, SmoothBody2>) {
          const double t = smooth_angle_at_arc_length(b, stream.uniform() * kTwoPi * b.a0());
          return {b.point(t), t, 0};
        } else {
          double total = 0.0;
          if constexpr (std::is_same_v<T, Polygon2>) {
            for (std::size_t k = 0; k < b.size(); ++k) total += norm(b.edge(k));
          } else {
            for (const auto& a : b.arcs()) total += a.length();
          }
          double s = stream.uniform() * total;
          if constexpr (std::is_same_v<T, Polygon2>) {
            std::size_t k = 0;
            for (; k + 1 < b.size() && s >= norm(b.edge(k)); ++k) s -= norm(b.edge(k));
            const Vec2 e = b.edge(k);
            const Vec2 nrm = -b.inward_normal(k);
            return {b.vertex(k) + std::min(s / norm(e), 1.0) * e, std::atan2(nrm.y, nrm.x), k};
          } else {
            std::size_t k = 0;
            for (; k + 1 < b.arcs().size() && s >= b.arcs()[k].length(); ++k) s -= b.arcs()[k].length();
            const Arc& a = b.arcs()[k];
            const double t = a.start + std::min(s / a.radius, a.span);
            return {a.point_at(t), wrap_angle(t), k};
          }
        }
      },
      body);
}

std::vector<BoundarySample> sample_boundary2(const Body2& body, std::size_t n, std::uint64_t seed) {
  std::vector<BoundarySample> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    SampleStream stream(seed, i);
    out[i] = draw_boundary2(body, stream);
  }
  return out;
}

double difference_body_area(const Body2& body) {
  return std::visit(
      [](const auto& b) -> double {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Polygon2>) {
          const Polygon2 neg = b.transformed(-1.0, 0.0, 0.0, -1.0);
          const auto sum = minkowski_sum(b, neg);
          return shoelace_area(sum);
        } else if constexpr (std::is_same_v<T, SmoothBody2>) {
          // h(t) + h(t + pi): odd harmonics cancel, even ones double.
          const double a0 = 2.0 * b.a0();
          double area = kPi * a0 * a0;
          for (int k = 2; k <= b.degree(); k += 2) {
            const double a = 2.0 * b.cos_coeffs()[k - 1], c = 2.0 * b.sin_coeffs()[k - 1];
            area += 0.5 * kPi * (1.0 - static_cast<double>(k) * k) * (a * a + c * c);
          }
          return area;
        } else {
          double w = 0.0;
          if (b.constant_width(&w)) return kPi * w * w;
          // 1/2 int (H^2 - H'^2) with H = h(t) + h(t + pi); H' from support points.
          constexpr int kNodes = 1 << 16;
          double s = 0.0;
          for (int j = 0; j < kNodes; ++j) {
            const double t = kTwoPi * (j + 0.5) / kNodes;
            const Vec2 u = polar(t);
            const Point2 p = b.support_point(t), q = b.support_point(t + kPi);
            const double hh = dot(p, u) - dot(q, u);
            const double dh = dot(p, perp(u)) - dot(q, perp(u));
            s += hh * hh - dh * dh;
          }
          return 0.5 * s * kTwoPi / kNodes;
        }
      },
      body);
}

}  // namespace cvxn
