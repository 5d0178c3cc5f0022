#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "convexnormals/averaging.hpp"
#include "convexnormals/body_io.hpp"
#include "convexnormals/cli.hpp"
#include "convexnormals/diameters.hpp"
#include "convexnormals/discretization.hpp"
#include "convexnormals/errors.hpp"
#include "convexnormals/evolute.hpp"
#include "convexnormals/flows.hpp"
#include "convexnormals/minkowski.hpp"
#include "convexnormals/normals.hpp"
#include "convexnormals/wedges.hpp"

namespace py = pybind11;
using namespace cvxn;

namespace {

Point2 pt(const std::pair<double, double>& p) { return {p.first, p.second}; }

py::dict report_dict(const EstimateReport& r) {
  py::dict d;
  d["mean"] = r.mean;
  d["std_error"] = r.std_error;
  d["ci_lo"] = r.ci_lo;
  d["ci_hi"] = r.ci_hi;
  d["samples_used"] = r.samples_used;
  d["degenerate_resampled"] = r.degenerate_resampled;
  d["exact"] = r.exact ? py::cast(*r.exact) : py::none();
  return d;
}

py::dict count_dict(const NormalCount& c) {
  py::dict d;
  d["count"] = c.total();
  d["stable"] = c.stable;
  d["unstable"] = c.unstable;
  d["degenerate"] = c.degenerate;
  d["infinite"] = c.infinite;
  return d;
}

SamplingOptions sampling(int threads) {
  SamplingOptions o;
  o.threads = threads;
  return o;
}

// Planar bodies arrive as any of the three bound classes.
Body2 body2(const py::handle& h) {
  if (py::isinstance<Polygon2>(h)) return h.cast<Polygon2>();
  if (py::isinstance<SmoothBody2>(h)) return h.cast<SmoothBody2>();
  if (py::isinstance<ArcBody2>(h)) return h.cast<ArcBody2>();
  fail(ErrorKind::Unsupported, "expected a planar body");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Normals, equilibria and affine diameters of convex bodies";
  m.attr("__version__") = kVersion;

  static py::exception<GeometryError> geometry_error(m, "GeometryError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const GeometryError& e) {
      py::set_error(geometry_error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<Polygon2>(m, "Polygon")
      .def_property_readonly("vertices", [](const Polygon2& p) {
        std::vector<std::pair<double, double>> v;
        for (const Point2& q : p.vertices()) v.emplace_back(q.x, q.y);
        return v;
      });
  py::class_<SmoothBody2>(m, "SupportBody")
      .def_property_readonly("a0", &SmoothBody2::a0)
      .def_property_readonly("cos", &SmoothBody2::cos_coeffs)
      .def_property_readonly("sin", &SmoothBody2::sin_coeffs)
      .def("h", &SmoothBody2::h, py::arg("theta"))
      .def("rho", &SmoothBody2::rho, py::arg("theta"))
      .def_property_readonly("min_rho", &SmoothBody2::min_rho);
  py::class_<ArcBody2>(m, "ArcBody").def("support", &ArcBody2::support, py::arg("theta"));
  py::class_<Polytope3>(m, "Polytope")
      .def_property_readonly("num_vertices", [](const Polytope3& p) { return p.vertices().size(); })
      .def_property_readonly("num_facets", [](const Polytope3& p) { return p.facets().size(); });

  // construction
  m.def("polygon", [](const std::vector<std::pair<double, double>>& v) {
    std::vector<Point2> pts;
    for (const auto& q : v) pts.push_back(pt(q));
    return build_polygon(pts);
  }, py::arg("points"), "Convex hull of the points");
  m.def("support_body", &SmoothBody2::create, py::arg("a0"), py::arg("cos") = std::vector<double>{},
        py::arg("sin") = std::vector<double>{}, "Body with support a0 + sum a_k cos kt + b_k sin kt (k from 1)");
  m.def("disk", [](double r, std::pair<double, double> c) { return SmoothBody2::disk(r, pt(c)); }, py::arg("radius"),
        py::arg("center") = std::pair<double, double>{0.0, 0.0});
  m.def("reuleaux", &build_reuleaux, py::arg("sides"), py::arg("width"));
  m.def("ellipse", [](double a, double b, int degree) { return fit_ellipse(a, b, degree).body; }, py::arg("a"),
        py::arg("b"), py::arg("degree") = 24, "Fourier fit of the ellipse support function");
  m.def("standard_polytope", &standard_polytope, py::arg("name"));
  m.def("parse_body", [](const std::string& text) -> py::object {
    const LoadedBody b = parse_body(text);
    if (b.planar()) return std::visit([](const auto& x) { return py::cast(x); }, b.planar_body());
    return py::cast(b.solid());
  }, py::arg("json_text"));

  // measures
  m.def("measure", [](const py::object& o) { const Body2 b = body2(o);
    const Measure2 x = measure2d(b);
    return py::make_tuple(x.area, x.perimeter);
  }, py::arg("body"), "(area, perimeter)");
  m.def("difference_body_area", [](const py::object& o) { return difference_body_area(body2(o)); }, py::arg("body"));

  // pointwise counts
  m.def("count_normals", [](const py::object& o, std::pair<double, double> p) { const Body2 b = body2(o); return count_dict(classify_normals2(b, pt(p))); },
        py::arg("body"), py::arg("p"));
  m.def("count_normals3", [](const Polytope3& b, std::tuple<double, double, double> p) {
    const NormalCount3 c = count_normals3(b, {std::get<0>(p), std::get<1>(p), std::get<2>(p)});
    py::dict d;
    d["count"] = c.count;
    d["by_dim"] = std::vector<int>(c.by_dim.begin(), c.by_dim.end());
    d["on_wedge_boundary"] = c.on_wedge_boundary;
    return d;
  }, py::arg("polytope"), py::arg("p"));
  m.def("count_diameters", [](const py::object& o, std::pair<double, double> p) { const Body2 b = body2(o);
    DiameterCount d;
    if (const auto* s = std::get_if<SmoothBody2>(&b)) d = count_diameters_smooth(*s, pt(p));
    else if (const auto* q = std::get_if<Polygon2>(&b)) d = count_diameters_polygon(*q, pt(p));
    else fail(ErrorKind::Unsupported, "diameter counts need a support body or a polygon");
    py::dict out;
    out["count"] = d.count;
    out["degenerate"] = d.degenerate;
    out["infinite"] = d.infinite;
    return out;
  }, py::arg("body"), py::arg("p"));
  m.def("count_minkowski_normals", [](const py::object& norm_ball, const SmoothBody2& k, std::pair<double, double> p) {
    return count_dict(count_minkowski_normals(NormBall2::create(body2(norm_ball)), k, pt(p)));
  }, py::arg("norm"), py::arg("body"), py::arg("p"));

  // averages
  m.def("estimate", [](const py::object& body, const std::string& counter, std::size_t samples, std::uint64_t seed,
                       bool boundary, const py::object& norm, int threads) {
    std::optional<NormBall2> ball;
    if (!norm.is_none()) ball = NormBall2::create(body2(norm));
    const Counter c{parse_counter(counter), ball ? &*ball : nullptr};
    const SamplingOptions o = sampling(threads);
    EstimateReport r;
    if (py::isinstance<Polytope3>(body)) {
      if (boundary) fail(ErrorKind::Unsupported, "boundary averages are planar only");
      const Polytope3 solid = body.cast<Polytope3>();
      py::gil_scoped_release nogil;
      r = estimate_interior_average(solid, c, samples, seed, o);
    } else {
      const Body2 b = body2(body);
      py::gil_scoped_release nogil;
      r = boundary ? estimate_boundary_average(b, c, samples, seed, o) : estimate_interior_average(b, c, samples, seed, o);
    }
    return report_dict(r);
  }, py::arg("body"), py::arg("counter") = "normals", py::arg("samples") = 100000, py::arg("seed") = 1,
     py::arg("boundary") = false, py::arg("norm") = py::none(), py::arg("threads") = 0);

  // polygons
  m.def("exact_average_normals", [](const Polygon2& p) { return exact_average_normals(p).mean; }, py::arg("polygon"));
  m.def("euler_residual", &euler_residual, py::arg("polygon"));
  m.def("wedge_fill_deficiency", &wedge_fill_deficiency, py::arg("polygon"));
  m.def("wedges", [](const Polygon2& p) {
    py::list out;
    for (const Wedge& w : all_wedges(p)) {
      py::dict d;
      d["kind"] = to_string(w.kind);
      d["index"] = w.index;
      d["area"] = w.area;
      out.append(d);
    }
    return out;
  }, py::arg("polygon"));

  // evolutes and diameters
  m.def("contains_evolute", [](const SmoothBody2& b) {
    const EvoluteContainment c = contains_evolute(b);
    return py::make_tuple(c.contained, c.worst_violation);
  }, py::arg("body"), "(contained, worst violation)");
  m.def("rolling_ball_radius", &rolling_ball_radius, py::arg("body"));
  m.def("theta_sweep", [](const SmoothBody2& b, int grid) {
    std::vector<std::pair<double, double>> out;
    for (const ThetaSweepRow& r : theta_sweep(b, grid)) out.emplace_back(r.theta, r.length);
    return out;
  }, py::arg("body"), py::arg("grid") = 720);
  m.def("half_square_integral", &half_square_integral, py::arg("body"), py::arg("grid") = 4096);

  // normed planes
  m.def("tau", [](const py::object& o) { const Body2 b = body2(o); return hexagon_ratio_tau(NormBall2::create(b)); }, py::arg("norm"));
  m.def("normed_width_bound", [](const py::object& o) { const Body2 b = body2(o); return normed_width_bound(NormBall2::create(b)); },
        py::arg("norm"));

  // experiments
  m.def("evolve_flow", [](const SmoothBody2& b, const std::string& kind, double t_end, int steps, std::size_t samples,
                          std::uint64_t seed, double power) {
    FlowSpec spec = parse_flow_kind(kind);
    spec.t_end = t_end;
    spec.steps = steps;
    spec.power = power;
    const FlowTrace tr = evolve_flow(b, spec, samples, seed);
    py::dict d;
    d["times"] = tr.times;
    py::list n, s;
    for (const auto& r : tr.n_values) n.append(report_dict(r));
    for (const auto& r : tr.n_surf_values) s.append(report_dict(r));
    d["n"] = n;
    d["n_surf"] = s;
    d["truncated"] = tr.truncated;
    return d;
  }, py::arg("body"), py::arg("kind") = "outward_eikonal", py::arg("t_end") = 1.0, py::arg("steps") = 10,
     py::arg("samples") = 20000, py::arg("seed") = 1, py::arg("power") = 1.0);
  m.def("derivative_residual", [](const SmoothBody2& b, double dt, std::size_t samples, std::uint64_t seed) {
    const DerivativeCheck d = derivative_residual(b, dt, samples, seed);
    return py::make_tuple(d.residual, d.ci_width);
  }, py::arg("body"), py::arg("dt") = 1e-3, py::arg("samples") = 100000, py::arg("seed") = 1,
     "(residual, combined CI width)");
  m.def("discretization_race", [](const SmoothBody2& b, const std::vector<int>& ks, std::size_t samples,
                                  std::uint64_t seed) {
    std::vector<std::tuple<int, double, double>> out;
    for (const RaceRow& r : discretization_race(b, ks, samples, seed)) out.emplace_back(r.k, r.n_polygon, r.margin);
    return out;
  }, py::arg("body"), py::arg("ks"), py::arg("samples") = 100000, py::arg("seed") = 1, "[(k, n(P_k), margin)]");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<const char*> argv{"cvxn"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "(exit code, stdout, stderr) of one cvxn invocation");
}
