#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "convexnormals/bodies2d.hpp"
#include "convexnormals/bodies3d.hpp"

namespace cvxn {

enum class FootSource { Edge, Vertex, Arc, Corner, Smooth, Face };

/// Equilibrium type of the boundary distance function at a foot.
enum class Equilibrium { Stable, Unstable, Saddle, Degenerate };

const char* to_string(FootSource s);
const char* to_string(Equilibrium e);

/// Boundary foot of one normal through the query point.
struct NormalFoot {
  Point2 foot;
  FootSource source = FootSource::Smooth;
  std::size_t index = 0;  // edge, vertex, arc or corner index
  double theta = 0.0;     // outer normal angle at the foot (smooth feet: root angle)
  double chord_length = 0.0;  // length of the normal segment inside the body
  Equilibrium kind = Equilibrium::Stable;
};

/// Counts without foot refinement; the fast path used by the averaging code.
struct NormalCount {
  int stable = 0;
  int unstable = 0;
  int degenerate = 0;
  bool infinite = false;  // the query sees a continuum of normals (disk centre)
  int total() const { return stable + unstable + degenerate; }
  bool flagged() const { return degenerate > 0 || infinite; }
};

/// Relative tolerance of the evolute (degenerate root) test for smooth bodies.
inline constexpr double kEvoluteTolerance = 1e-6;
/// Relative tolerance of wedge-boundary tests for polygons and arcs.
inline constexpr double kWedgeTolerance = 1e-10;

/// Classifies the normals through p. Throws Domain unless p is strictly
/// inside (when `check_inside`).
NormalCount classify_normals2(const Body2& body, Point2 p, bool check_inside = true);

/// All feet of normals through p with their equilibrium type.
std::vector<NormalFoot> normal_feet2(const Body2& body, Point2 p);

/// n(K, p); degenerate feet are counted once. Throws DegenerateConfiguration
/// when p sees infinitely many normals.
int count_normals2(const Body2& body, Point2 p);

/// u(K, p). Throws DegenerateConfiguration when a degenerate foot is present,
/// and checks stable == unstable.
int stable_count(const Body2& body, Point2 p);

struct NormalCount3 {
  int count = 0;
  std::array<int, 3> by_dim{};  // index = face dimension (0 vertex, 1 edge, 2 facet)
  bool on_wedge_boundary = false;
};

/// Number of faces F (facets, edges, vertices) whose wedge contains p: the
/// projection of p onto aff F lies in relint F and p lies on the inward side
/// within the normal cone of F. Closed-cone convention, with a flag when p is
/// within 1e-9 of a wedge boundary.
NormalCount3 count_normals3(const Polytope3& poly, Vec3 p, bool check_inside = true);

/// Length of the chord from boundary point q along inward unit direction d.
double ray_exit(const Body2& body, Point2 q, Vec2 d);

}  // namespace cvxn
