#include "convexnormals/discretization.hpp"

#include "convexnormals/errors.hpp"
#include "convexnormals/wedges.hpp"

namespace cvxn {

Polygon2 inscribe_polygon(const SmoothBody2& body, int k) {
  if (k < 3) fail(ErrorKind::Validation, "an inscribed polygon needs at least 3 vertices");
  const double total = kTwoPi * body.a0();
  std::vector<Point2> pts(k);
  for (int j = 0; j < k; ++j) pts[j] = body.point(smooth_angle_at_arc_length(body, total * j / k));
  return Polygon2::from_ccw(std::move(pts));
}

std::vector<RaceRow> discretization_race(const SmoothBody2& body, const std::vector<int>& k_list,
                                         std::size_t n_samples, std::uint64_t seed, const SamplingOptions& opts) {
  const EstimateReport nk =
      estimate_interior_average(Body2{body}, Counter{CounterKind::Normals, nullptr}, n_samples, seed, opts);
  std::vector<RaceRow> rows;
  for (int k : k_list) {
    RaceRow r;
    r.k = k;
    r.n_polygon = exact_average_normals(inscribe_polygon(body, k)).mean;
    r.n_body = nk;
    r.margin = r.n_polygon - nk.ci_hi;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace cvxn
