#include "convexnormals/bodies3d.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "convexnormals/errors.hpp"
#include "convexnormals/rng.hpp"

namespace cvxn {

namespace {

// Newell's method: area-weighted normal of a (possibly non-triangular) loop.
Vec3 newell(const std::vector<Vec3>& v, const std::vector<int>& loop) {
  Vec3 n{};
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Vec3 a = v[loop[i]], b = v[loop[(i + 1) % loop.size()]];
    n = n + cross(a, b);
  }
  return n;
}

std::string facet_error(const char* what, std::size_t f) {
  std::ostringstream os;
  os << what << " (facet " << f << ")";
  return os.str();
}

}  // namespace

Polytope3 Polytope3::create(std::vector<Vec3> vertices, std::vector<std::vector<int>> facets) {
  const int nv = static_cast<int>(vertices.size());
  if (nv < 4 || facets.size() < 4) fail(ErrorKind::Validation, "polytope needs at least 4 vertices and 4 facets");
  Polytope3 p;
  Vec3 c{};
  for (const auto& v : vertices) c = c + v;
  c = (1.0 / nv) * c;
  double scale = 0.0;
  for (const auto& v : vertices) scale = std::max(scale, norm(v - c));
  if (!(scale > 0.0)) fail(ErrorKind::Validation, "polytope vertices coincide");
  const double tol = 1e-9 * scale;

  std::map<std::pair<int, int>, int> directed;  // (a, b) -> facet
  for (std::size_t f = 0; f < facets.size(); ++f) {
    const auto& loop = facets[f];
    if (loop.size() < 3) fail(ErrorKind::Validation, facet_error("facet loop has fewer than 3 vertices", f));
    for (int idx : loop) {
      if (idx < 0 || idx >= nv) fail(ErrorKind::Validation, facet_error("vertex index out of range", f));
    }
    const Vec3 nn = newell(vertices, loop);
    if (norm(nn) < 1e-12 * scale * scale) fail(ErrorKind::Validation, facet_error("facet has zero area", f));
    Facet facet{loop, unit(nn), 0.0};
    double off = 0.0;
    for (int idx : loop) off += dot(vertices[idx], facet.normal);
    facet.offset = off / static_cast<double>(loop.size());
    for (int idx : loop) {
      if (std::abs(dot(vertices[idx], facet.normal) - facet.offset) > tol)
        fail(ErrorKind::Validation, facet_error("facet is not planar", f));
    }
    if (!(dot(c, facet.normal) < facet.offset - tol))
      fail(ErrorKind::Validation, facet_error("facet orientation is inward or centroid not interior", f));
    for (const auto& v : vertices) {
      if (dot(v, facet.normal) > facet.offset + tol) fail(ErrorKind::Validation, facet_error("polytope is not convex", f));
    }
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const auto key = std::make_pair(loop[i], loop[(i + 1) % loop.size()]);
      if (!directed.emplace(key, static_cast<int>(f)).second)
        fail(ErrorKind::Validation, facet_error("directed edge used twice (inconsistent orientation)", f));
    }
    p.facets_.push_back(std::move(facet));
  }
  for (const auto& [key, f] : directed) {
    const auto it = directed.find({key.second, key.first});
    if (it == directed.end()) fail(ErrorKind::Validation, "edge without a matching opposite facet");
    if (key.first < key.second) p.edges_.push_back({key.first, key.second, f, it->second});
  }
  const long euler = static_cast<long>(nv) - static_cast<long>(p.edges_.size()) +
                     static_cast<long>(p.facets_.size());
  if (euler != 2) fail(ErrorKind::Validation, "Euler characteristic V - E + F != 2");

  p.neighbors_.assign(nv, {});
  p.vertex_facets_.assign(nv, {});
  for (const auto& e : p.edges_) {
    p.neighbors_[e.a].push_back(e.b);
    p.neighbors_[e.b].push_back(e.a);
  }
  for (std::size_t f = 0; f < p.facets_.size(); ++f) {
    for (int idx : p.facets_[f].loop) p.vertex_facets_[idx].push_back(static_cast<int>(f));
  }
  for (int i = 0; i < nv; ++i) {
    if (p.neighbors_[i].size() < 3) fail(ErrorKind::Validation, "vertex with fewer than 3 edges");
  }
  p.vertices_ = std::move(vertices);
  p.centroid_ = c;
  p.scale_ = scale;
  return p;
}

double Polytope3::margin(Vec3 x) const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& f : facets_) m = std::min(m, f.offset - dot(x, f.normal));
  return m;
}

Polytope3 Polytope3::scaled(double lambda) const {
  std::vector<Vec3> v = vertices_;
  for (auto& x : v) x = lambda * x;
  std::vector<std::vector<int>> loops;
  for (const auto& f : facets_) loops.push_back(f.loop);
  return create(std::move(v), std::move(loops));
}

Polytope3 build_polytope(std::vector<Vec3> vertices, std::vector<std::vector<int>> facets) {
  return Polytope3::create(std::move(vertices), std::move(facets));
}

Polytope3 convex_hull3(const std::vector<Vec3>& pts) {
  const int n = static_cast<int>(pts.size());
  Vec3 c{};
  for (const auto& v : pts) c = c + v;
  c = (1.0 / n) * c;
  double scale = 0.0;
  for (const auto& v : pts) scale = std::max(scale, norm(v - c));
  const double tol = 1e-9 * scale;

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> loops;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        Vec3 nn = cross(pts[j] - pts[i], pts[k] - pts[i]);
        if (norm(nn) < 1e-9 * scale * scale) continue;
        nn = unit(nn);
        if (dot(c - pts[i], nn) > 0.0) nn = -nn;
        const double off = dot(pts[i], nn);
        bool supporting = true;
        std::vector<int> on;
        for (int m = 0; m < n && supporting; ++m) {
          const double d = dot(pts[m], nn) - off;
          if (d > tol) supporting = false;
          else if (d > -tol) on.push_back(m);
        }
        if (!supporting || !seen.insert(on).second) continue;
        // Facet loop = strict 2D hull of the coplanar points, counterclockwise
        // about the outward normal.
        Vec3 fc{};
        for (int m : on) fc = fc + pts[m];
        fc = (1.0 / static_cast<double>(on.size())) * fc;
        const Vec3 ax = unit(pts[on[0]] - fc);
        const Vec3 ay = cross(nn, ax);
        std::vector<std::pair<Point2, int>> flat;
        for (int m : on) flat.push_back({{dot(pts[m] - fc, ax), dot(pts[m] - fc, ay)}, m});
        std::sort(flat.begin(), flat.end(), [](const auto& a, const auto& b) {
          return a.first.x < b.first.x || (a.first.x == b.first.x && a.first.y < b.first.y);
        });
        std::vector<std::pair<Point2, int>> hull(2 * flat.size());
        std::size_t h = 0;
        const double ctol = 1e-9 * scale * scale;
        auto turn = [&](std::size_t a, std::size_t b, const Point2& q) {
          return cross(hull[b].first - hull[a].first, q - hull[a].first);
        };
        for (std::size_t t = 0; t < flat.size(); ++t) {
          while (h >= 2 && turn(h - 2, h - 1, flat[t].first) <= ctol) --h;
          hull[h++] = flat[t];
        }
        for (std::size_t t = flat.size() - 1, lower = h + 1; t-- > 0;) {
          while (h >= lower && turn(h - 2, h - 1, flat[t].first) <= ctol) --h;
          hull[h++] = flat[t];
        }
        std::vector<int> loop;
        for (std::size_t t = 0; t + 1 < h; ++t) loop.push_back(hull[t].second);
        loops.push_back(std::move(loop));
      }
    }
  }
  // Points strictly inside the hull are not vertices: compact the index set.
  std::vector<int> remap(n, -1);
  std::vector<Vec3> verts;
  for (auto& loop : loops) {
    for (int& m : loop) {
      if (remap[m] < 0) {
        remap[m] = static_cast<int>(verts.size());
        verts.push_back(pts[m]);
      }
      m = remap[m];
    }
  }
  return Polytope3::create(std::move(verts), std::move(loops));
}

namespace {

std::vector<Vec3> zonotope_points(const std::vector<Vec3>& generators) {
  const std::size_t g = generators.size();
  std::vector<Vec3> pts;
  for (std::size_t mask = 0; mask < (1u << g); ++mask) {
    Vec3 s{};
    for (std::size_t i = 0; i < g; ++i) s = s + ((mask >> i) & 1u ? 1.0 : -1.0) * generators[i];
    pts.push_back(s);
  }
  return pts;
}

}  // namespace

Polytope3 prism_over(const Polygon2& base, double height) {
  if (!(height > 0.0)) fail(ErrorKind::Domain, "prism height must be positive");
  const Point2 c = centroid2(Body2{base});
  std::vector<Vec3> pts;
  for (const auto& v : base.vertices()) {
    pts.push_back({v.x - c.x, v.y - c.y, -0.5 * height});
    pts.push_back({v.x - c.x, v.y - c.y, 0.5 * height});
  }
  return convex_hull3(pts);
}

Polytope3 standard_polytope(const std::string& name) {
  if (name == "cube") {
    return prism_over(Polygon2::from_ccw({{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}}), 1.0);
  }
  if (name == "hexagonal_prism") {
    std::vector<Point2> hex;
    for (int j = 0; j < 6; ++j) hex.push_back(polar(kTwoPi * j / 6.0));
    return prism_over(Polygon2::from_ccw(std::move(hex)), 1.0);
  }
  if (name == "truncated_octahedron") {
    // All permutations of (0, +-1, +-2).
    std::vector<Vec3> pts;
    const int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& pm : perm) {
      for (double s1 : {-1.0, 1.0}) {
        for (double s2 : {-2.0, 2.0}) {
          double c[3] = {0.0, s1, s2};
          pts.push_back({c[pm[0]], c[pm[1]], c[pm[2]]});
        }
      }
    }
    return convex_hull3(pts);
  }
  if (name == "rhombic_dodecahedron") {
    // Unit edge length: (+-1, +-1, +-1) and permutations of (+-2, 0, 0), scaled by 1/sqrt(3).
    const double s = 1.0 / std::sqrt(3.0);
    std::vector<Vec3> pts;
    for (double x : {-1.0, 1.0})
      for (double y : {-1.0, 1.0})
        for (double z : {-1.0, 1.0}) pts.push_back(s * Vec3{x, y, z});
    for (double t : {-2.0, 2.0}) {
      pts.push_back(s * Vec3{t, 0, 0});
      pts.push_back(s * Vec3{0, t, 0});
      pts.push_back(s * Vec3{0, 0, t});
    }
    return convex_hull3(pts);
  }
  if (name == "elongated_dodecahedron") {
    // Zonotope of the four body diagonals and one coordinate axis, unit edges.
    const double s = 0.5 / std::sqrt(3.0);
    return convex_hull3(zonotope_points({s * Vec3{1, 1, 1}, s * Vec3{1, 1, -1}, s * Vec3{1, -1, 1},
                                         s * Vec3{-1, 1, 1}, Vec3{0, 0, 0.5}}));
  }
  fail(ErrorKind::Domain, "unknown standard polytope '" + name + "'");
}

Measure3 measure3d(const Polytope3& p) {
  Measure3 m;
  const Vec3 c = p.centroid();
  const auto& v = p.vertices();
  for (const auto& f : p.facets()) {
    const Vec3 a = v[f.loop[0]];
    for (std::size_t i = 1; i + 1 < f.loop.size(); ++i) {
      const Vec3 b = v[f.loop[i]], d = v[f.loop[i + 1]];
      const Vec3 tri = cross(b - a, d - a);
      m.surface_area += 0.5 * norm(tri);
      m.volume += dot(a - c, tri) / 6.0;
    }
  }
  return m;
}

bool contains3(const Polytope3& p, Vec3 x, double tol) {
  for (const auto& f : p.facets()) {
    if (dot(x, f.normal) > f.offset + tol * p.scale()) return false;
  }
  return true;
}

BBox3 bounding_box(const Polytope3& p) {
  BBox3 b{p.vertices()[0], p.vertices()[0]};
  for (const auto& v : p.vertices()) {
    b.lo = {std::min(b.lo.x, v.x), std::min(b.lo.y, v.y), std::min(b.lo.z, v.z)};
    b.hi = {std::max(b.hi.x, v.x), std::max(b.hi.y, v.y), std::max(b.hi.z, v.z)};
  }
  return b;
}

std::vector<Vec3> sample_interior3(const Polytope3& p, std::size_t n, std::uint64_t seed) {
  const BBox3 box = bounding_box(p);
  std::vector<Vec3> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    SampleStream stream(seed, i);
    out[i] = draw_interior(p, box, stream);
  }
  return out;
}

}  // namespace cvxn
