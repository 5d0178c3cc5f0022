#include "convexnormals/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "convexnormals/averaging.hpp"
#include "convexnormals/body_io.hpp"
#include "convexnormals/diameters.hpp"
#include "convexnormals/discretization.hpp"
#include "convexnormals/errors.hpp"
#include "convexnormals/evolute.hpp"
#include "convexnormals/flows.hpp"
#include "convexnormals/minkowski.hpp"
#include "convexnormals/normals.hpp"
#include "convexnormals/wedges.hpp"
#include "json.hpp"

#ifndef CVXN_CORPUS_DIR
#define CVXN_CORPUS_DIR "corpus"
#endif

namespace cvxn {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::string body_file, norm_file, counter = "normals", grid = "256x256", k_list = "8,16,32,64";
  std::string kind = "outward_eikonal", out_dir, at, suite = "standard", corpus = CVXN_CORPUS_DIR;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  double t_end = 1.0, power = 1.0;
  int steps = 10, threads = 0, points = 720;
  bool boundary = false, theta_sweep = false;
};

// 12 significant digits, fixed scientific notation.
std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return buf;
}

std::string jnum(double x) { return std::isfinite(x) ? num(x) : "null"; }

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

struct Context {
  const Options& opt;
  std::ostream& out;
  std::ostream& err;
  std::string hash = "none";

  std::string header() const {
    return std::string("# cvxn ") + kVersion + " seed=" + std::to_string(opt.seed) + " body=" + hash;
  }

  std::string run_json() const {
    return std::string("{\"version\": ") + quoted(kVersion) + ", \"seed\": " + std::to_string(opt.seed) +
           ", \"body\": " + quoted(hash) + "}";
  }

  SamplingOptions sampling() const {
    SamplingOptions s;
    s.threads = opt.threads;
    return s;
  }

  // Writes `content` to --out/name, or to stdout when no --out is given.
  void emit(const std::string& name, const std::string& content, bool binary = false) const {
    if (opt.out_dir.empty()) {
      // The header was already echoed.
      const std::string h = header() + "\n";
      if (!binary) out << (content.starts_with(h) ? content.substr(h.size()) : content);
      return;
    }
    fs::create_directories(opt.out_dir);
    const fs::path path = fs::path(opt.out_dir) / name;
    std::ofstream f(path, std::ios::binary);
    f << content;
    if (!f) throw std::ios_base::failure("cannot write " + path.string());
    out << "# wrote " << path.string() << "\n";
  }
};

LoadedBody load_required(const std::string& path, const char* flag) {
  if (path.empty()) fail(ErrorKind::Parse, std::string("missing required option ") + flag);
  return load_body_file(path);
}

std::vector<double> parse_list(const std::string& s, const char* flag) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, std::string("option ") + flag + ": bad number '" + item + "'");
    }
  }
  return v;
}

const SmoothBody2& smooth_of(const LoadedBody& b, const char* what) {
  const Body2& body = b.planar_body();
  if (!std::holds_alternative<SmoothBody2>(body))
    fail(ErrorKind::Unsupported, std::string(what) + " needs a Fourier support body, got " + b.type);
  return std::get<SmoothBody2>(body);
}

std::string report_json(const EstimateReport& r) {
  std::string s = "\"mean\": " + jnum(r.mean) + ", \"std_error\": " + jnum(r.std_error) +
                  ", \"ci_lo\": " + jnum(r.ci_lo) + ", \"ci_hi\": " + jnum(r.ci_hi) +
                  ", \"samples_used\": " + std::to_string(r.samples_used) +
                  ", \"degenerate_resampled\": " + std::to_string(r.degenerate_resampled);
  s += ", \"exact\": " + (r.exact ? jnum(*r.exact) : std::string("null"));
  return s;
}

// ---- commands ----

int cmd_estimate(Context& c) {
  const LoadedBody b = load_required(c.opt.body_file, "--body");
  c.hash = b.hash;
  const CounterKind kind = parse_counter(c.opt.counter);
  std::optional<NormBall2> norm;
  if (kind == CounterKind::Minkowski) {
    const LoadedBody nb = load_required(c.opt.norm_file, "--norm");
    norm = NormBall2::create(nb.planar_body());
  }
  const Counter counter{kind, norm ? &*norm : nullptr};
  EstimateReport r;
  if (!b.planar()) {
    if (c.opt.boundary) fail(ErrorKind::Unsupported, "boundary averages are planar only");
    r = estimate_interior_average(b.solid(), counter, c.opt.samples, c.opt.seed, c.sampling());
  } else if (c.opt.boundary) {
    r = estimate_boundary_average(b.planar_body(), counter, c.opt.samples, c.opt.seed, c.sampling());
  } else {
    r = estimate_interior_average(b.planar_body(), counter, c.opt.samples, c.opt.seed, c.sampling());
  }
  c.out << c.header() << "\n";
  std::string j = "{\"run\": " + c.run_json() + ", \"type\": " + quoted(b.type) +
                  ", \"counter\": " + quoted(to_string(kind)) +
                  ", \"domain\": " + quoted(c.opt.boundary ? "boundary" : "interior") + ", " + report_json(r) + "}\n";
  c.emit("estimate.json", j);
  return kExitOk;
}

int cmd_field(Context& c) {
  const LoadedBody b = load_required(c.opt.body_file, "--body");
  c.hash = b.hash;
  int nx = 0, ny = 0;
  char tail = 0;
  if (std::sscanf(c.opt.grid.c_str(), "%dx%d%c", &nx, &ny, &tail) != 2 || nx < 1 || ny < 1)
    fail(ErrorKind::Parse, "option --grid: expected WxH, got '" + c.opt.grid + "'");
  const CounterKind kind = parse_counter(c.opt.counter);
  std::optional<NormBall2> norm;
  if (kind == CounterKind::Minkowski) norm = NormBall2::create(load_required(c.opt.norm_file, "--norm").planar_body());
  const FieldMap f = field_map(b.planar_body(), nx, ny, Counter{kind, norm ? &*norm : nullptr}, c.sampling());
  c.out << c.header() << "\n";

  // CSV with the top row first, matching the image.
  std::string csv = c.header() + "\n# grid " + std::to_string(nx) + "x" + std::to_string(ny) + " box " +
                    num(f.box.xmin) + " " + num(f.box.xmax) + " " + num(f.box.ymin) + " " + num(f.box.ymax) +
                    "; -1 outside, -2 degenerate\n";
  int vmax = 1;
  for (int v : f.values) vmax = std::max(vmax, v);
  std::string pgm = "P5\n" + std::to_string(nx) + " " + std::to_string(ny) + "\n255\n";
  for (int iy = ny - 1; iy >= 0; --iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const int v = f.at(ix, iy);
      csv += std::to_string(v);
      csv += ix + 1 < nx ? ',' : '\n';
      unsigned char g = 255;  // outside
      if (v == kFieldDegenerate) g = 0;
      else if (v >= 0) g = static_cast<unsigned char>(32 + (200 * v) / vmax);
      pgm += static_cast<char>(g);
    }
  }
  c.emit("field.csv", csv);
  if (!c.opt.out_dir.empty()) c.emit("field.pgm", pgm, true);
  return kExitOk;
}

int cmd_wedges(Context& c) {
  const LoadedBody b = load_required(c.opt.body_file, "--body");
  c.hash = b.hash;
  const Body2& body = b.planar_body();
  if (!std::holds_alternative<Polygon2>(body)) fail(ErrorKind::Unsupported, "wedges needs a polygon, got " + b.type);
  const Polygon2& poly = std::get<Polygon2>(body);
  const auto wedges = all_wedges(poly);
  const WedgeAverage avg = exact_average_normals(poly);
  c.out << c.header() << "\n";
  std::string csv = c.header() + "\n# n=" + num(avg.mean) + " euler_residual=" + num(euler_residual(poly)) +
                    "\nface_kind,face_index,area,cumulative_I\n";
  double cum = 0.0;
  for (const Wedge& w : wedges) {
    cum += w.area;
    csv += std::string(to_string(w.kind)) + "," + std::to_string(w.index) + "," + num(w.area) + "," + num(cum) + "\n";
  }
  c.emit("wedges.csv", csv);
  return kExitOk;
}

int cmd_evolute(Context& c) {
  const LoadedBody b = load_required(c.opt.body_file, "--body");
  c.hash = b.hash;
  const SmoothBody2& body = smooth_of(b, "evolute");
  const auto prof = curvature_profile(body, c.opt.points);
  const EvoluteContainment ec = contains_evolute(body);
  c.out << c.header() << "\n";
  std::string csv = c.header() + "\n# contains_evolute=" + (ec.contained ? "true" : "false") +
                    " worst_violation=" + num(ec.worst_violation) + " rolling_radius=" +
                    num(rolling_ball_radius(body)) + "\ntheta,rho,cx,cy\n";
  for (const EvolutePoint& e : prof)
    csv += num(e.theta) + "," + num(e.rho) + "," + num(e.center.x) + "," + num(e.center.y) + "\n";
  c.emit("evolute.csv", csv);
  return kExitOk;
}

int cmd_flow(Context& c) {
  const LoadedBody b = load_required(c.opt.body_file, "--body");
  c.hash = b.hash;
  const SmoothBody2& body = smooth_of(b, "flow");
  FlowSpec spec = parse_flow_kind(c.opt.kind);
  spec.t_end = c.opt.t_end;
  spec.steps = c.opt.steps;
  spec.power = c.opt.power;
  const FlowTrace tr = evolve_flow(body, spec, c.opt.samples, c.opt.seed, c.sampling());
  c.out << c.header() << "\n";
  std::string csv = c.header() + "\n# kind=" + c.opt.kind + (tr.truncated ? " truncated" : "") +
                    "\nt,n_mean,n_lo,n_hi,n_surf_mean,area,perimeter\n";
  for (std::size_t i = 0; i < tr.times.size(); ++i) {
    const Measure2 m = measure2d(Body2{tr.bodies[i]});
    const EstimateReport& n = tr.n_values[i];
    csv += num(tr.times[i]) + "," + num(n.mean) + "," + num(n.ci_lo) + "," + num(n.ci_hi) + "," +
           num(tr.n_surf_values[i].mean) + "," + num(m.area) + "," + num(m.perimeter) + "\n";
  }
  if (tr.truncated) c.err << "{\"warning\": \"flow stopped early at convexity loss\"}\n";
  c.emit("flow.csv", csv);
  return kExitOk;
}

int cmd_discretize(Context& c) {
  const LoadedBody b = load_required(c.opt.body_file, "--body");
  c.hash = b.hash;
  const SmoothBody2& body = smooth_of(b, "discretize");
  std::vector<int> ks;
  for (double k : parse_list(c.opt.k_list, "--k")) {
    if (k < 3 || k != std::floor(k)) fail(ErrorKind::Parse, "option --k: entries must be integers >= 3");
    ks.push_back(static_cast<int>(k));
  }
  const auto rows = discretization_race(body, ks, c.opt.samples, c.opt.seed, c.sampling());
  c.out << c.header() << "\n";
  std::string csv = c.header() + "\nk,n_polygon,n_body_mean,n_body_ci_hi,margin\n";
  for (const RaceRow& r : rows)
    csv += std::to_string(r.k) + "," + num(r.n_polygon) + "," + num(r.n_body.mean) + "," + num(r.n_body.ci_hi) +
           "," + num(r.margin) + "\n";
  c.emit("discretize.csv", csv);
  return kExitOk;
}

int cmd_diameters(Context& c) {
  const LoadedBody b = load_required(c.opt.body_file, "--body");
  c.hash = b.hash;
  const Body2& body = b.planar_body();
  if (!c.opt.at.empty()) {
    const auto xy = parse_list(c.opt.at, "--at");
    if (xy.size() != 2) fail(ErrorKind::Parse, "option --at: expected x,y");
    DiameterCount d;
    if (const auto* s = std::get_if<SmoothBody2>(&body)) d = count_diameters_smooth(*s, {xy[0], xy[1]});
    else if (const auto* p = std::get_if<Polygon2>(&body)) d = count_diameters_polygon(*p, {xy[0], xy[1]});
    else fail(ErrorKind::Unsupported, "diameter counts are not available for " + b.type);
    c.out << c.header() << "\n";
    c.emit("diameters.json", std::string("{\"count\": ") + std::to_string(d.count) +
                                 ", \"degenerate\": " + (d.degenerate ? "true" : "false") +
                                 ", \"infinite\": " + (d.infinite ? "true" : "false") + "}\n");
    return kExitOk;
  }
  if (!c.opt.theta_sweep) fail(ErrorKind::Parse, "diameters needs --theta-sweep or --at");
  const SmoothBody2& s = smooth_of(b, "diameters --theta-sweep");
  const auto rows = theta_sweep(s, c.opt.points);
  c.out << c.header() << "\n";
  std::string csv = c.header() + "\n# half_square_integral=" + num(half_square_integral(s, 4096)) +
                    " difference_body_area=" + num(difference_body_area(body)) + "\ntheta,D\n";
  for (const ThetaSweepRow& r : rows) csv += num(r.theta) + "," + num(r.length) + "\n";
  c.emit("diameters.csv", csv);
  return kExitOk;
}

int cmd_tau(Context& c) {
  const LoadedBody nb = load_required(c.opt.norm_file, "--norm");
  c.hash = nb.hash;
  const NormBall2 M = NormBall2::create(nb.planar_body());
  const HexagonSearch h = largest_affine_hexagon(M);
  c.out << c.header() << "\n";
  c.emit("tau.json", "{\"run\": " + c.run_json() + ", \"tau\": " + jnum(h.tau) + ", \"hexagon_area\": " +
                         jnum(h.hexagon_area) + ", \"norm_area\": " + jnum(M.area()) + ", \"u\": [" + jnum(h.u.x) +
                         ", " + jnum(h.u.y) + "], \"v\": [" + jnum(h.v.x) + ", " + jnum(h.v.y) +
                         "], \"width_bound\": " + jnum(6.0 / (3.0 - 2.0 * h.tau)) + "}\n");
  return kExitOk;
}

int cmd_point(Context& c) {
  const LoadedBody b = load_required(c.opt.body_file, "--body");
  c.hash = b.hash;
  const auto x = parse_list(c.opt.at, "--at");
  std::string j;
  if (!b.planar()) {
    if (x.size() != 3) fail(ErrorKind::Parse, "option --at: expected x,y,z for a polytope");
    const NormalCount3 r = count_normals3(b.solid(), {x[0], x[1], x[2]});
    j = "{\"count\": " + std::to_string(r.count) + ", \"by_dim\": {\"2\": " + std::to_string(r.by_dim[2]) +
        ", \"1\": " + std::to_string(r.by_dim[1]) + ", \"0\": " + std::to_string(r.by_dim[0]) +
        "}, \"on_wedge_boundary\": " + (r.on_wedge_boundary ? "true" : "false") + "}\n";
  } else {
    if (x.size() != 2) fail(ErrorKind::Parse, "option --at: expected x,y for a planar body");
    const Point2 p{x[0], x[1]};
    const CounterKind kind = parse_counter(c.opt.counter);
    if (kind == CounterKind::Normals) {
      const NormalCount r = classify_normals2(b.planar_body(), p);
      j = std::string("{\"count\": ") + (r.infinite ? "null" : std::to_string(r.total())) +
          ", \"stable\": " + std::to_string(r.stable) + ", \"unstable\": " + std::to_string(r.unstable) +
          ", \"degenerate\": " + std::to_string(r.degenerate) + ", \"infinite\": " + (r.infinite ? "true" : "false") +
          "}\n";
    } else {
      std::optional<NormBall2> norm;
      if (kind == CounterKind::Minkowski)
        norm = NormBall2::create(load_required(c.opt.norm_file, "--norm").planar_body());
      const PointCount r = evaluate_counter(b.planar_body(), Counter{kind, norm ? &*norm : nullptr}, p);
      j = std::string("{\"count\": ") + std::to_string(r.value) +
          ", \"degenerate\": " + (r.degenerate ? "true" : "false") + "}\n";
    }
  }
  c.out << c.header() << "\n";
  c.emit("point.json", j);
  return kExitOk;
}

// ---- bound battery ----

bool planar_symmetric(const Body2& body) {
  if (const auto* p = std::get_if<Polygon2>(&body)) return is_centrally_symmetric(*p);
  // h(t) - h(t + pi) = 2 <c, u(t)> for the centre c.
  const Point2 c = centroid2(body);
  const double tol = 1e-9 * body_scale(body);
  for (int i = 0; i < 720; ++i) {
    const double t = std::numbers::pi * 2.0 * i / 720;
    const double lhs = support2(body, t) - support2(body, t + std::numbers::pi);
    if (std::abs(lhs - 2.0 * (c.x * std::cos(t) + c.y * std::sin(t))) > tol) return false;
  }
  return true;
}

bool planar_constant_width(const Body2& body) {
  if (std::holds_alternative<Polygon2>(body)) return false;
  const double w0 = support2(body, 0.0) + support2(body, std::numbers::pi);
  for (int i = 1; i < 720; ++i) {
    const double t = std::numbers::pi * 2.0 * i / 720;
    if (std::abs(support2(body, t) + support2(body, t + std::numbers::pi) - w0) > 1e-9 * w0) return false;
  }
  return true;
}

bool solid_symmetric(const Polytope3& p) {
  Vec3 c{0.0, 0.0, 0.0};
  for (const Vec3& v : p.vertices()) c = c + v;
  c = c * (1.0 / static_cast<double>(p.vertices().size()));
  const double tol = 1e-9 * p.scale();
  for (const Vec3& v : p.vertices()) {
    const Vec3 m = c * 2.0 - v;
    bool found = false;
    for (const Vec3& w : p.vertices()) found = found || norm(w - m) <= tol;
    if (!found) return false;
  }
  return true;
}

int cmd_validate(Context& c) {
  if (c.opt.suite != "standard") fail(ErrorKind::Unsupported, "unknown suite '" + c.opt.suite + "'");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(c.opt.corpus))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) fail(ErrorKind::Parse, "no body files in corpus '" + c.opt.corpus + "'");

  const double cw_bound = 2.0 * std::numbers::pi / (std::numbers::pi - std::sqrt(3.0));
  std::string csv = c.header() + "\nbody,type,bound,limit,value,ci_lo,ci_hi,status\n";
  int violations = 0;
  for (const fs::path& path : files) {
    const LoadedBody b = load_body_file(path.string());
    EstimateReport r;
    std::vector<std::pair<std::string, double>> bounds;
    if (b.planar()) {
      const Body2& body = b.planar_body();
      if (const auto* poly = std::get_if<Polygon2>(&body)) {
        const double v = exact_average_normals(*poly).mean;
        r.mean = r.ci_lo = r.ci_hi = v;
        r.exact = v;
      } else {
        r = estimate_interior_average(body, Counter{}, c.opt.samples, c.opt.seed, c.sampling());
      }
      bounds.emplace_back("planar", 12.0);
      if (planar_symmetric(body)) bounds.emplace_back("centrally_symmetric", 8.0);
      if (const auto* s = std::get_if<SmoothBody2>(&body); s && contains_evolute(*s).contained)
        bounds.emplace_back("evolute_inside", 6.0);
      if (planar_constant_width(body)) bounds.emplace_back("constant_width", cw_bound);
    } else {
      r = estimate_interior_average(b.solid(), Counter{}, c.opt.samples, c.opt.seed, c.sampling());
      if (solid_symmetric(b.solid())) bounds.emplace_back("symmetric_3d", 26.0);
    }
    for (const auto& [name, limit] : bounds) {
      // Violation only when the whole interval lies above the bound.
      const bool ok = r.ci_lo <= limit + 1e-9;
      violations += ok ? 0 : 1;
      csv += path.filename().string() + "," + b.type + "," + name + "," + num(limit) + "," + num(r.mean) + "," +
             num(r.ci_lo) + "," + num(r.ci_hi) + "," + (ok ? "pass" : "FAIL") + "\n";
    }
  }
  c.out << c.header() << "\n";
  c.emit("validate.csv", csv);
  if (violations > 0) {
    c.err << "{\"error\": \"bound_violated\", \"count\": " << violations << "}\n";
    return kExitBoundViolated;
  }
  return kExitOk;
}

void error_record(std::ostream& err, const char* kind, const std::string& reason) {
  err << "{\"error\": " << quoted(kind) << ", \"reason\": " << quoted(reason) << "}\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Normals, diameters and their averages for convex bodies", "cvxn"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool sampled) {
    sub->add_option("--out", o.out_dir, "Directory for report files (stdout when omitted)");
    sub->add_option("--seed", o.seed, "RNG seed");
    if (sampled) {
      sub->add_option("--samples", o.samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
      sub->add_option("--threads", o.threads, "Worker threads (0 = hardware); results do not depend on it")
          ->check(CLI::NonNegativeNumber);
    }
  };
  auto body_opt = [&](CLI::App* sub) { sub->add_option("--body", o.body_file, "Body spec (JSON)"); };
  auto counter_opt = [&](CLI::App* sub) {
    sub->add_option("--counter", o.counter, "normals | diameters | minkowski");
    sub->add_option("--norm", o.norm_file, "Norm ball spec (JSON) for the minkowski counter");
  };

  CLI::App* estimate = app.add_subcommand("estimate", "Interior (or boundary) average of a counter");
  body_opt(estimate), counter_opt(estimate), common(estimate, true);
  estimate->add_flag("--boundary", o.boundary, "Average over the boundary (n_surf)");

  CLI::App* field = app.add_subcommand("field", "Counter values on a grid (CSV and PGM)");
  body_opt(field), counter_opt(field), common(field, true);
  field->add_option("--grid", o.grid, "WxH");

  CLI::App* wedges = app.add_subcommand("wedges", "Wedge areas of a polygon");
  body_opt(wedges), common(wedges, false);

  CLI::App* evolute = app.add_subcommand("evolute", "Curvature profile and centres of curvature");
  body_opt(evolute), common(evolute, false);
  evolute->add_option("--points", o.points, "Angles on the output grid")->check(CLI::Range(8, 1 << 20));

  CLI::App* flow = app.add_subcommand("flow", "n(K(t)) along a flow");
  body_opt(flow), common(flow, true);
  flow->add_option("--kind", o.kind, "outward_eikonal | inward_eikonal | curvature_power_out | curvature_power_in");
  flow->add_option("--t-end", o.t_end, "Final time")->check(CLI::PositiveNumber);
  flow->add_option("--steps", o.steps, "Number of time steps")->check(CLI::Range(1, 100000));
  flow->add_option("--power", o.power, "Curvature power")->check(CLI::PositiveNumber);

  CLI::App* discretize = app.add_subcommand("discretize", "Exact n of inscribed polygons against n(K)");
  body_opt(discretize), common(discretize, true);
  discretize->add_option("--k", o.k_list, "Comma-separated vertex counts");

  CLI::App* diameters = app.add_subcommand("diameters", "Affine diameters: D(theta) sweep or a point count");
  body_opt(diameters), common(diameters, false);
  diameters->add_flag("--theta-sweep", o.theta_sweep, "Emit theta, D(theta)");
  diameters->add_option("--points", o.points, "Angles in the sweep")->check(CLI::Range(8, 1 << 20));
  diameters->add_option("--at", o.at, "x,y");

  CLI::App* tau = app.add_subcommand("tau", "Largest inscribed affine-regular hexagon of a norm ball");
  tau->add_option("--norm", o.norm_file, "Norm ball spec (JSON)");
  common(tau, false);

  CLI::App* validate = app.add_subcommand("validate", "Bound battery over the body corpus");
  validate->add_option("--suite", o.suite, "Battery name");
  validate->add_option("--corpus", o.corpus, "Directory of body specs");
  common(validate, true);
  validate->get_option("--samples")->default_val(20000);

  CLI::App* point = app.add_subcommand("point", "Counts through one point");
  body_opt(point), counter_opt(point), common(point, false);
  point->add_option("--at", o.at, "x,y or x,y,z")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    error_record(err, "usage", e.what());
    return kExitUsage;
  }

  Context ctx{o, out, err};
  try {
    if (estimate->parsed()) return cmd_estimate(ctx);
    if (field->parsed()) return cmd_field(ctx);
    if (wedges->parsed()) return cmd_wedges(ctx);
    if (evolute->parsed()) return cmd_evolute(ctx);
    if (flow->parsed()) return cmd_flow(ctx);
    if (discretize->parsed()) return cmd_discretize(ctx);
    if (diameters->parsed()) return cmd_diameters(ctx);
    if (tau->parsed()) return cmd_tau(ctx);
    if (validate->parsed()) return cmd_validate(ctx);
    if (point->parsed()) return cmd_point(ctx);
  } catch (const GeometryError& e) {
    error_record(err, to_string(e.kind()), e.what());
    if (e.kind() == ErrorKind::Unsupported) return kExitUnsupported;
    if (e.kind() == ErrorKind::Parse) return kExitParse;
    return kExitGeometry;
  } catch (const std::exception& e) {
    error_record(err, "io", e.what());
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace cvxn
