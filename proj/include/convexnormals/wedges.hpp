#pragma once

#include <cstddef>
#include <vector>

#include "convexnormals/bodies2d.hpp"
#include "convexnormals/bodies3d.hpp"

namespace cvxn {

enum class FaceKind { Edge, Vertex };
const char* to_string(FaceKind k);

/// Points of the polygon lying on some normal emanating from one face.
struct Wedge {
  FaceKind kind = FaceKind::Edge;
  std::size_t index = 0;
  std::vector<Point2> region;  // convex, counterclockwise; may be empty
  double area = 0.0;
  int parity = 1;  // +1 edges, -1 vertices
};

/// Convex polygon clipped to the half-plane <x, n> <= c.
std::vector<Point2> clip_halfplane(const std::vector<Point2>& poly, Vec2 n, double c);

Wedge edge_wedge(const Polygon2& poly, std::size_t i);
Wedge vertex_wedge(const Polygon2& poly, std::size_t i);
/// All edge wedges followed by all vertex wedges.
std::vector<Wedge> all_wedges(const Polygon2& poly);

struct WedgeAverage {
  double integral = 0.0;  // I(P)
  double mean = 0.0;      // n(P) = I / area
};
WedgeAverage exact_average_normals(const Polygon2& poly);

/// (sum of edge-wedge areas - sum of vertex-wedge areas) / area; zero for
/// every convex polygon.
double euler_residual(const Polygon2& poly);

/// True when the vertex set is symmetric about its centroid (relative 1e-9).
bool is_centrally_symmetric(const Polygon2& poly, double rel_tol = 1e-9);

/// area(2P - P) - area(P) - I(P). Throws Domain for asymmetric input.
double wedge_fill_deficiency(const Polygon2& poly);

/// Non-negative least squares min |G x - y| with x >= 0 (Lawson-Hanson);
/// generators are the columns of G.
std::vector<double> nnls(const std::vector<Vec3>& generators, Vec3 y, double* residual = nullptr);

/// y lies in the cone spanned by the generators (residual <= tol * |y|).
bool in_conical_hull(const std::vector<Vec3>& generators, Vec3 y, double tol = 1e-9);

/// Vertex wedge membership by the conical-hull test on the incident facet
/// normals: p - v is inward, i.e. v - p in the outer normal cone at v.
bool vertex_wedge_contains3(const Polytope3& poly, int vertex, Vec3 p);

}  // namespace cvxn
