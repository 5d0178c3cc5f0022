#include "convexnormals/wedges.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "convexnormals/errors.hpp"

namespace cvxn {

const char* to_string(FaceKind k) { return k == FaceKind::Edge ? "edge" : "vertex"; }

std::vector<Point2> clip_halfplane(const std::vector<Point2>& poly, Vec2 n, double c) {
  std::vector<Point2> out;
  const std::size_t m = poly.size();
  if (m == 0) return out;
  out.reserve(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 a = poly[i], b = poly[(i + 1) % m];
    const double da = dot(a, n) - c, db = dot(b, n) - c;
    if (da <= 0.0) out.push_back(a);
    if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) out.push_back(a + (da / (da - db)) * (b - a));
  }
  if (out.size() < 3) out.clear();
  return out;
}

namespace {

Wedge finish(FaceKind kind, std::size_t index, std::vector<Point2> region) {
  Wedge w;
  w.kind = kind;
  w.index = index;
  w.parity = kind == FaceKind::Edge ? 1 : -1;
  w.area = region.empty() ? 0.0 : shoelace_area(region);
  w.region = std::move(region);
  return w;
}

}  // namespace

Wedge edge_wedge(const Polygon2& poly, std::size_t i) {
  const std::size_t n = poly.size();
  i %= n;
  const Point2 a = poly.vertex(i), b = poly.vertex(i + 1);
  const Vec2 e = b - a;
  auto region = clip_halfplane(poly.vertices(), -e, -dot(a, e));  // <x - a, e> >= 0
  region = clip_halfplane(region, e, dot(b, e));                   // <x - b, e> <= 0
  return finish(FaceKind::Edge, i, std::move(region));
}

Wedge vertex_wedge(const Polygon2& poly, std::size_t i) {
  const std::size_t n = poly.size();
  i %= n;
  const Point2 v = poly.vertex(i);
  const Vec2 ein = poly.edge(i + n - 1), eout = poly.edge(i);
  auto region = clip_halfplane(poly.vertices(), ein, dot(v, ein));  // <x - v, e_in> <= 0
  region = clip_halfplane(region, -eout, -dot(v, eout));             // <x - v, e_out> >= 0
  return finish(FaceKind::Vertex, i, std::move(region));
}

std::vector<Wedge> all_wedges(const Polygon2& poly) {
  std::vector<Wedge> out;
  out.reserve(2 * poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) out.push_back(edge_wedge(poly, i));
  for (std::size_t i = 0; i < poly.size(); ++i) out.push_back(vertex_wedge(poly, i));
  return out;
}

WedgeAverage exact_average_normals(const Polygon2& poly) {
  WedgeAverage r;
  for (const auto& w : all_wedges(poly)) r.integral += w.area;
  r.mean = r.integral / shoelace_area(poly.vertices());
  return r;
}

double euler_residual(const Polygon2& poly) {
  double signed_sum = 0.0;
  for (const auto& w : all_wedges(poly)) signed_sum += w.parity * w.area;
  constexpr int m = 2;
  const double expected = 1.0 + ((m - 1) % 2 == 0 ? 1.0 : -1.0);
  return signed_sum / shoelace_area(poly.vertices()) - expected;
}

bool is_centrally_symmetric(const Polygon2& poly, double rel_tol) {
  const std::size_t n = poly.size();
  if (n % 2 != 0) return false;
  Point2 c{0.0, 0.0};
  for (const auto& v : poly.vertices()) c = c + v;
  c = (1.0 / n) * c;
  double scale = 0.0;
  for (const auto& v : poly.vertices()) scale = std::max(scale, norm(v - c));
  // In counterclockwise order the antipode of vertex i is vertex i + n/2.
  for (std::size_t i = 0; i < n / 2; ++i) {
    const Point2 a = poly.vertex(i), b = poly.vertex(i + n / 2);
    if (norm((a - c) + (b - c)) > rel_tol * scale) return false;
  }
  return true;
}

double wedge_fill_deficiency(const Polygon2& poly) {
  if (!is_centrally_symmetric(poly)) fail(ErrorKind::Domain, "wedge fill deficiency needs a centrally symmetric polygon");
  const Polygon2 twice = poly.transformed(2.0, 0.0, 0.0, 2.0);
  const Polygon2 neg = poly.transformed(-1.0, 0.0, 0.0, -1.0);
  const double big = shoelace_area(minkowski_sum(twice, neg));
  const double area = shoelace_area(poly.vertices());
  const double d = big - area - exact_average_normals(poly).integral;
  // Round-off of order eps * area is reported as zero.
  return std::abs(d) <= 1e-12 * big ? 0.0 : d;
}

std::vector<double> nnls(const std::vector<Vec3>& generators, Vec3 y, double* residual) {
  const int m = static_cast<int>(generators.size());
  Eigen::Matrix<double, 3, Eigen::Dynamic> A(3, m);
  for (int j = 0; j < m; ++j) A.col(j) << generators[j].x, generators[j].y, generators[j].z;
  const Eigen::Vector3d b(y.x, y.y, y.z);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(m);
  std::vector<bool> passive(m, false);
  const double tol = 1e-12 * std::max(1.0, b.norm()) * std::max(1.0, A.norm());

  for (int outer = 0; outer < 3 * m + 10; ++outer) {
    const Eigen::VectorXd w = A.transpose() * (b - A * x);
    int best = -1;
    double wmax = tol;
    for (int j = 0; j < m; ++j)
      if (!passive[j] && w[j] > wmax) { wmax = w[j]; best = j; }
    if (best < 0) break;
    passive[best] = true;
    for (int inner = 0; inner < 3 * m + 10; ++inner) {
      std::vector<int> idx;
      for (int j = 0; j < m; ++j) if (passive[j]) idx.push_back(j);
      Eigen::MatrixXd Ap(3, idx.size());
      for (std::size_t k = 0; k < idx.size(); ++k) Ap.col(k) = A.col(idx[k]);
      const Eigen::VectorXd z = Ap.colPivHouseholderQr().solve(b);
      bool feasible = true;
      for (std::size_t k = 0; k < idx.size(); ++k) feasible = feasible && z[k] > 0.0;
      if (feasible) {
        x.setZero();
        for (std::size_t k = 0; k < idx.size(); ++k) x[idx[k]] = z[k];
        break;
      }
      double alpha = 1.0;
      for (std::size_t k = 0; k < idx.size(); ++k)
        if (z[k] <= 0.0) alpha = std::min(alpha, x[idx[k]] / (x[idx[k]] - z[k]));
      for (std::size_t k = 0; k < idx.size(); ++k) {
        const int j = idx[k];
        x[j] += alpha * (z[k] - x[j]);
        if (x[j] <= tol) { x[j] = 0.0; passive[j] = false; }
      }
    }
  }
  if (residual) *residual = (A * x - b).norm();
  return std::vector<double>(x.data(), x.data() + m);
}

bool in_conical_hull(const std::vector<Vec3>& generators, Vec3 y, double tol) {
  const double ny = norm(y);
  if (ny == 0.0) return true;
  double res = 0.0;
  nnls(generators, y, &res);
  return res <= tol * ny;
}

bool vertex_wedge_contains3(const Polytope3& poly, int vertex, Vec3 p) {
  std::vector<Vec3> normals;
  for (int f : poly.vertex_facets(vertex)) normals.push_back(poly.facets()[f].normal);
  return in_conical_hull(normals, poly.vertices()[vertex] - p);
}

}  // namespace cvxn
