#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convexnormals/bodies2d.hpp"
#include "convexnormals/vec.hpp"

namespace cvxn {

struct Facet {
  std::vector<int> loop;  // counterclockwise seen from outside
  Vec3 normal;            // outward unit normal
  double offset = 0.0;    // <x, normal> = offset on the facet plane
};

struct Edge3 {
  int a = 0, b = 0;        // vertex indices
  int left = 0, right = 0;  // incident facets
};

/// Convex polytope stored as vertices plus outward facet loops, with the
/// derived edge list and vertex adjacency.
class Polytope3 {
 public:
  /// Validates planarity, orientation, convexity and V - E + F = 2.
  static Polytope3 create(std::vector<Vec3> vertices, std::vector<std::vector<int>> facets);

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Edge3>& edges() const { return edges_; }
  /// Neighbouring vertex indices of vertex i (edge graph).
  const std::vector<int>& neighbors(int i) const { return neighbors_[i]; }
  /// Facets incident to vertex i.
  const std::vector<int>& vertex_facets(int i) const { return vertex_facets_[i]; }
  Vec3 centroid() const { return centroid_; }
  double scale() const { return scale_; }

  /// Signed distance margin: min over facets of offset - <p, n>.
  double margin(Vec3 p) const;
  Polytope3 scaled(double lambda) const;

 private:
  Polytope3() = default;
  std::vector<Vec3> vertices_;
  std::vector<Facet> facets_;
  std::vector<Edge3> edges_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::vector<int>> vertex_facets_;
  Vec3 centroid_;
  double scale_ = 1.0;
};

Polytope3 build_polytope(std::vector<Vec3> vertices, std::vector<std::vector<int>> facets);

/// Convex hull of a small point set as a validated polytope (coplanar facet
/// points merged into one loop). Intended for tens of points.
Polytope3 convex_hull3(const std::vector<Vec3>& points);

/// Named solids: cube, hexagonal_prism, truncated_octahedron,
/// rhombic_dodecahedron, elongated_dodecahedron. Throws Domain for unknown names.
Polytope3 standard_polytope(const std::string& name);
/// Right prism over a planar polygon, centred at the origin.
Polytope3 prism_over(const Polygon2& base, double height);

struct Measure3 {
  double volume = 0.0;
  double surface_area = 0.0;
};

Measure3 measure3d(const Polytope3& p);
bool contains3(const Polytope3& p, Vec3 x, double tol = 1e-12);
std::vector<Vec3> sample_interior3(const Polytope3& p, std::size_t n, std::uint64_t seed);

struct BBox3 {
  Vec3 lo, hi;
};
BBox3 bounding_box(const Polytope3& p);

template <class Stream>
Vec3 draw_interior(const Polytope3& p, const BBox3& box, Stream& stream) {
  for (;;) {
    Vec3 x{stream.uniform(box.lo.x, box.hi.x), stream.uniform(box.lo.y, box.hi.y),
           stream.uniform(box.lo.z, box.hi.z)};
    if (contains3(p, x)) return x;
  }
}

}  // namespace cvxn
