#include "convexnormals/normals.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "convexnormals/errors.hpp"
#include "convexnormals/periodic_roots.hpp"

namespace cvxn {

const char* to_string(FootSource s) {
  switch (s) {
    case FootSource::Edge: return "edge";
    case FootSource::Vertex: return "vertex";
    case FootSource::Arc: return "arc";
    case FootSource::Corner: return "corner";
    case FootSource::Smooth: return "smooth";
    case FootSource::Face: return "face";
  }
  return "unknown";
}

const char* to_string(Equilibrium e) {
  switch (e) {
    case Equilibrium::Stable: return "stable";
    case Equilibrium::Unstable: return "unstable";
    case Equilibrium::Saddle: return "saddle";
    case Equilibrium::Degenerate: return "degenerate";
  }
  return "unknown";
}

namespace {

void require_inside(const Body2& body, Point2 p) {
  bool inside = false;
  if (const auto* sm = std::get_if<SmoothBody2>(&body)) {
    inside = sm->support_margin(p) > 1e-12 * sm->a0();
  } else {
    inside = contains2(body, p, -1e-12);
  }
  if (!inside) {
    std::ostringstream os;
    os << "query point (" << p.x << ", " << p.y << ") is not strictly inside the body";
    fail(ErrorKind::Domain, os.str());
  }
}

// ------------------------------------------------------------------ polygon
//
// With t_i the projection parameter of p on edge i, p lies in the wedge of
// edge i iff 0 < t_i < 1 and in the wedge of vertex i iff t_{i-1} <= 1 and
// t_i >= 0. Crossing t_i = 0 creates or destroys the edge-i and vertex-i
// feet together; on that line the two coincide in one degenerate foot.

struct PolygonTerms {
  std::vector<double> t;
};

PolygonTerms polygon_terms(const Polygon2& poly, Point2 p) {
  PolygonTerms terms;
  terms.t.resize(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2 e = poly.edge(i);
    terms.t[i] = dot(p - poly.vertex(i), e) / dot(e, e);
  }
  return terms;
}

enum class VertexState { Outside, Inside, Boundary };

VertexState vertex_state(double t_prev, double t_next) {
  const double a = t_prev - 1.0, b = t_next;
  if (a < -kWedgeTolerance && b > kWedgeTolerance) return VertexState::Inside;
  if ((std::abs(a) <= kWedgeTolerance && b >= -kWedgeTolerance) ||
      (std::abs(b) <= kWedgeTolerance && a <= kWedgeTolerance))
    return VertexState::Boundary;
  return VertexState::Outside;
}

NormalCount classify_polygon(const Polygon2& poly, Point2 p) {
  const PolygonTerms terms = polygon_terms(poly, p);
  const std::size_t n = poly.size();
  NormalCount c;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = terms.t[i];
    if (t > kWedgeTolerance && t < 1.0 - kWedgeTolerance) ++c.stable;
    switch (vertex_state(terms.t[(i + n - 1) % n], t)) {
      case VertexState::Inside: ++c.unstable; break;
      case VertexState::Boundary: ++c.degenerate; break;
      case VertexState::Outside: break;
    }
  }
  return c;
}

// ----------------------------------------------------------------- arc body

std::vector<NormalFoot> arc_feet(const ArcBody2& body, Point2 p, bool* infinite) {
  std::vector<NormalFoot> feet;
  constexpr double kAngTol = 1e-10;
  std::vector<bool> near_edge;
  for (std::size_t i = 0; i < body.arcs().size(); ++i) {
    const Arc& a = body.arcs()[i];
    const Vec2 w = p - a.center;
    const double dist = norm(w);
    if (dist <= kWedgeTolerance * a.radius) {
      *infinite = true;
      return {};
    }
    const double phi = std::atan2(w.y, w.x);
    auto consider = [&](double angle, Equilibrium kind) {
      if (!angle_in_range(angle, a.start, a.span, kAngTol)) return;
      const double off = wrap_angle(angle - a.start);
      const bool edge = off <= kAngTol || off >= kTwoPi - kAngTol || std::abs(off - a.span) <= kAngTol;
      feet.push_back({a.point_at(angle), FootSource::Arc, i, wrap_angle(angle), 0.0, kind});
      near_edge.push_back(edge);
    };
    // Near foot c + R w/|w| sees p on its inward normal only when |p - c| < R.
    if (dist < a.radius * (1.0 - kWedgeTolerance)) consider(phi, Equilibrium::Stable);
    consider(phi + kPi, Equilibrium::Unstable);
  }
  for (std::size_t i = 0; i < body.corners().size(); ++i) {
    const Corner& c = body.corners()[i];
    const Vec2 d = c.vertex - p;
    const double phi = std::atan2(d.y, d.x);
    if (!angle_in_range(phi, c.cone_start, c.cone_span, kAngTol)) continue;
    const double off = wrap_angle(phi - c.cone_start);
    const bool edge = off <= kAngTol || off >= kTwoPi - kAngTol || std::abs(off - c.cone_span) <= kAngTol;
    feet.push_back({c.vertex, FootSource::Corner, i, wrap_angle(phi), 0.0, Equilibrium::Unstable});
    near_edge.push_back(edge);
  }
  // Feet on a cone boundary coincide with the neighbouring piece's foot.
  std::vector<NormalFoot> merged;
  std::vector<bool> used(feet.size(), false);
  double scale = 0.0;
  for (const auto& a : body.arcs()) scale = std::max(scale, a.radius);
  for (std::size_t i = 0; i < feet.size(); ++i) {
    if (used[i]) continue;
    NormalFoot f = feet[i];
    bool degenerate = near_edge[i];
    for (std::size_t j = i + 1; j < feet.size(); ++j) {
      if (!used[j] && norm(feet[j].foot - f.foot) <= 1e-9 * scale) {
        used[j] = true;
        degenerate = true;
      }
    }
    if (degenerate) f.kind = Equilibrium::Degenerate;
    merged.push_back(f);
  }
  return merged;
}

// --------------------------------------------------------------- smooth body

struct SmoothNormalFunction {
  const SmoothBody2& body;
  Point2 p;

  PeriodicSample operator()(double t) const {
    const SupportJet j = body.jet(t);
    const double c = std::cos(t), s = std::sin(t);
    return {-p.x * s + p.y * c - j.dh, -p.x * c - p.y * s - j.d2h};
  }

  void tabulate(int n, std::vector<double>& f, std::vector<double>& df) const {
    SupportGrid local;
    const SupportGrid* g = &body.grid();
    if (n != g->size) {
      local = body.make_grid(n);
      g = &local;
    }
    f.resize(n);
    df.resize(n);
    for (int j = 0; j < n; ++j) {
      f[j] = -p.x * g->sin_t[j] + p.y * g->cos_t[j] - g->dh[j];
      df[j] = -p.x * g->cos_t[j] - p.y * g->sin_t[j] - g->d2h[j];
    }
  }
};

// Root count on the coarse grid, certified by |g''| <= |p| + max|h'''|: a
// cell without sign change is root-free when its values clear the
// interpolation error, and a cell with one holds a single simple root when g'
// keeps its sign. Returns false when any cell is ambiguous.
bool coarse_count(const SmoothBody2& body, Point2 p, double tol, NormalCount* out) {
  const SupportGrid& g = body.coarse_grid();
  constexpr int n = SmoothBody2::kCoarseGrid;
  const double bound = norm(p) + body.third_derivative_bound();
  const double dip = bound * g.step * g.step / 8.0 + tol;
  const double turn = bound * g.step;
  std::array<double, n> f{}, df{};
  for (int j = 0; j < n; ++j) {
    f[j] = -p.x * g.sin_t[j] + p.y * g.cos_t[j] - g.dh[j];
    df[j] = -p.x * g.cos_t[j] - p.y * g.sin_t[j] - g.d2h[j];
  }
  NormalCount c;
  for (int j = 0; j < n; ++j) {
    const int k = j + 1 < n ? j + 1 : 0;
    if ((f[j] >= 0.0) == (f[k] >= 0.0)) {
      if (std::min(std::abs(f[j]), std::abs(f[k])) <= dip) return false;
      continue;
    }
    if ((df[j] >= 0.0) != (df[k] >= 0.0) || std::abs(df[j]) + std::abs(df[k]) <= turn) return false;
    if (f[j] > 0.0) ++c.stable; else ++c.unstable;
  }
  *out = c;
  return true;
}

RootScan smooth_scan(const SmoothBody2& body, Point2 p) {
  const SmoothNormalFunction fn{body, p};
  return scan_periodic_adaptive(
      SmoothBody2::kCheckGrid,
      [&](int n, std::vector<double>& f, std::vector<double>& df) { fn.tabulate(n, f, df); },
      fn, kEvoluteTolerance * body.a0());
}

NormalCount tally(const RootScan& scan) {
  NormalCount c;
  c.infinite = scan.identically_zero;
  for (const auto& x : scan.crossings) {
    if (x.direction < 0) ++c.stable;
    else if (x.direction > 0) ++c.unstable;
    else ++c.degenerate;
  }
  return c;
}

}  // namespace

NormalCount classify_normals2(const Body2& body, Point2 p, bool check_inside) {
  if (check_inside) require_inside(body, p);
  if (const auto* poly = std::get_if<Polygon2>(&body)) return classify_polygon(*poly, p);
  if (const auto* sm = std::get_if<SmoothBody2>(&body)) {
    NormalCount fast;
    if (coarse_count(*sm, p, kEvoluteTolerance * sm->a0(), &fast)) return fast;
    return tally(smooth_scan(*sm, p));
  }
  NormalCount c;
  const auto feet = arc_feet(std::get<ArcBody2>(body), p, &c.infinite);
  for (const auto& f : feet) {
    if (f.kind == Equilibrium::Stable) ++c.stable;
    else if (f.kind == Equilibrium::Unstable) ++c.unstable;
    else ++c.degenerate;
  }
  return c;
}

std::vector<NormalFoot> normal_feet2(const Body2& body, Point2 p) {
  require_inside(body, p);
  std::vector<NormalFoot> feet;
  if (const auto* poly = std::get_if<Polygon2>(&body)) {
    const PolygonTerms terms = polygon_terms(*poly, p);
    const std::size_t n = poly->size();
    for (std::size_t i = 0; i < n; ++i) {
      const double t = terms.t[i];
      const Vec2 out = -poly->inward_normal(i);
      const double edge_angle = wrap_angle(std::atan2(out.y, out.x));
      switch (vertex_state(terms.t[(i + n - 1) % n], t)) {
        case VertexState::Inside: {
          const Vec2 d = poly->vertex(i) - p;
          feet.push_back({poly->vertex(i), FootSource::Vertex, i, wrap_angle(std::atan2(d.y, d.x)),
                          0.0, Equilibrium::Unstable});
          break;
        }
        case VertexState::Boundary:
          feet.push_back({poly->vertex(i), FootSource::Vertex, i, edge_angle, 0.0, Equilibrium::Degenerate});
          break;
        case VertexState::Outside: break;
      }
      if (t > kWedgeTolerance && t < 1.0 - kWedgeTolerance)
        feet.push_back({poly->vertex(i) + t * poly->edge(i), FootSource::Edge, i, edge_angle, 0.0,
                        Equilibrium::Stable});
    }
  } else if (const auto* sm = std::get_if<SmoothBody2>(&body)) {
    const RootScan scan = smooth_scan(*sm, p);
    if (scan.identically_zero) fail(ErrorKind::DegenerateConfiguration, "infinitely many normals through the query point");
    const SmoothNormalFunction fn{*sm, p};
    for (const auto& x : scan.crossings) {
      const double t = x.degenerate() ? x.lo : refine_root(fn, x.lo, x.hi);
      const Equilibrium kind = x.direction < 0 ? Equilibrium::Stable
                               : x.direction > 0 ? Equilibrium::Unstable
                                                 : Equilibrium::Degenerate;
      feet.push_back({sm->point(t), FootSource::Smooth, 0, wrap_angle(t), 0.0, kind});
    }
  } else {
    bool infinite = false;
    feet = arc_feet(std::get<ArcBody2>(body), p, &infinite);
    if (infinite) fail(ErrorKind::DegenerateConfiguration, "infinitely many normals through the query point");
  }
  for (auto& f : feet) f.chord_length = ray_exit(body, f.foot, unit(p - f.foot));
  return feet;
}

int count_normals2(const Body2& body, Point2 p) {
  const NormalCount c = classify_normals2(body, p);
  if (c.infinite) fail(ErrorKind::DegenerateConfiguration, "infinitely many normals through the query point");
  return c.total();
}

int stable_count(const Body2& body, Point2 p) {
  const NormalCount c = classify_normals2(body, p);
  if (c.flagged())
    fail(ErrorKind::DegenerateConfiguration, "query point lies on the evolute (degenerate equilibrium)");
  if (c.stable != c.unstable) {
    std::ostringstream os;
    os << "stable/unstable mismatch: " << c.stable << " vs " << c.unstable;
    throw std::logic_error(os.str());
  }
  return c.stable;
}

double ray_exit(const Body2& body, Point2 q, Vec2 d) {
  if (const auto* poly = std::get_if<Polygon2>(&body)) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly->size(); ++i) {
      const Vec2 out = -poly->inward_normal(i);
      const double den = dot(d, out);
      if (den <= 1e-15) continue;
      best = std::min(best, dot(poly->vertex(i) - q, out) / den);
    }
    return best;
  }
  // min over outer normals u with <d,u> > 0 of (h(u) - <q,u>) / <d,u>.
  auto ratio = [&](double t) {
    const Vec2 u = polar(t);
    const double den = dot(d, u);
    if (den <= 1e-12) return std::numeric_limits<double>::infinity();
    return (support2(body, t) - dot(q, u)) / den;
  };
  constexpr int kGrid = 4096;
  const double step = kTwoPi / kGrid;
  double best = std::numeric_limits<double>::infinity();
  int arg = 0;
  for (int j = 0; j < kGrid; ++j) {
    const double v = ratio(j * step);
    if (v < best) { best = v; arg = j; }
  }
  double lo = (arg - 1) * step, hi = (arg + 1) * step;
  constexpr double kGold = 0.6180339887498949;
  double x1 = hi - kGold * (hi - lo), x2 = lo + kGold * (hi - lo);
  double f1 = ratio(x1), f2 = ratio(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - kGold * (hi - lo); f1 = ratio(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + kGold * (hi - lo); f2 = ratio(x2);
    }
  }
  return std::min(best, std::min(f1, f2));
}

// ----------------------------------------------------------------------- 3D

NormalCount3 count_normals3(const Polytope3& poly, Vec3 p, bool check_inside) {
  const double tol = 1e-9 * poly.scale();
  if (check_inside && !(poly.margin(p) > tol)) {
    std::ostringstream os;
    os << "query point (" << p.x << ", " << p.y << ", " << p.z << ") is not strictly inside the polytope";
    fail(ErrorKind::Domain, os.str());
  }
  NormalCount3 out;
  const auto& v = poly.vertices();

  // Facets: the orthogonal projection must fall in the relative interior.
  for (const auto& f : poly.facets()) {
    const Vec3 q = p + (f.offset - dot(p, f.normal)) * f.normal;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < f.loop.size(); ++i) {
      const Vec3 a = v[f.loop[i]], b = v[f.loop[(i + 1) % f.loop.size()]];
      worst = std::min(worst, dot(cross(unit(b - a), q - a), f.normal));
    }
    if (worst > -tol) {
      ++out.by_dim[2];
      if (worst <= tol) out.on_wedge_boundary = true;
    }
  }

  // Edges: projection inside the open segment, foot direction in the cone
  // spanned by the two incident facet normals.
  for (const auto& e : poly.edges()) {
    const Vec3 a = v[e.a], b = v[e.b];
    const Vec3 ab = b - a;
    const double len = norm(ab);
    const double s = dot(p - a, ab) / (len * len);
    const double along = std::min(s, 1.0 - s) * len;
    if (along < -tol) continue;
    const Vec3 y = (a + s * ab) - p;
    const Vec3 n1 = poly.facets()[e.left].normal, n2 = poly.facets()[e.right].normal;
    const double c = dot(n1, n2);
    const double r1 = dot(n1, y), r2 = dot(n2, y);
    const double det = 1.0 - c * c;
    const double alpha = (r1 - c * r2) / det, beta = (r2 - c * r1) / det;
    const double cone = std::min(alpha, beta);
    if (cone < -tol) continue;
    ++out.by_dim[1];
    if (along <= tol || cone <= tol) out.on_wedge_boundary = true;
  }

  // Vertices: v - p lies in the outer normal cone iff it makes a
  // non-acute angle with every edge leaving v (polar of the tangent cone).
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec3 y = v[i] - p;
    double worst = -std::numeric_limits<double>::infinity();
    for (int w : poly.neighbors(static_cast<int>(i))) worst = std::max(worst, dot(y, unit(v[w] - v[i])));
    if (worst > tol) continue;
    ++out.by_dim[0];
    if (worst >= -tol) out.on_wedge_boundary = true;
  }
  out.count = out.by_dim[0] + out.by_dim[1] + out.by_dim[2];
  return out;
}

}  // namespace cvxn
