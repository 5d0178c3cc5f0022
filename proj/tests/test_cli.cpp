#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "convexnormals/cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {
struct Result {
  int code;
  std::string out, err;
};

Result cvxn_run(std::vector<std::string> args) {
  args.insert(args.begin(), "cvxn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cvxn::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return std::string(CVXN_CORPUS_DIR) + "/" + name; }

// Everything after the reproducibility header.
nlohmann::json body_json(const std::string& out) { return nlohmann::json::parse(out.substr(out.find('\n') + 1)); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("estimate on the square") {
  const Result r = cvxn_run({"estimate", "--body", corpus("square.json"), "--counter", "normals", "--samples",
                             "100000", "--seed", "7"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("# cvxn 0.1.0 seed=7 body=", 0) == 0);
  const auto j = body_json(r.out);
  CHECK(j["mean"].get<double>() == doctest::Approx(8.0));
  CHECK(j["exact"].get<double>() == doctest::Approx(8.0));
  CHECK(j["run"]["seed"] == 7);
}

TEST_CASE("point on the cube centre") {
  const Result r = cvxn_run({"point", "--body", corpus("cube.json"), "--at", "0,0,0"});
  REQUIRE(r.code == 0);
  const auto j = body_json(r.out);
  CHECK(j["count"] == 26);
  CHECK(j["by_dim"]["2"] == 6);
  CHECK(j["by_dim"]["1"] == 12);
  CHECK(j["by_dim"]["0"] == 8);
}

TEST_CASE("validate passes on the shipped corpus") {
  const Result r = cvxn_run({"validate", "--suite", "standard", "--samples", "4000"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("reuleaux3.json,reuleaux,constant_width") != std::string::npos);
  CHECK(r.out.find("cube.json,standard3,symmetric_3d") != std::string::npos);
}

TEST_CASE("validate needs a non-empty corpus") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "cvxn_empty_corpus";
  fs::create_directories(dir);
  const Result r = cvxn_run({"validate", "--corpus", dir.string()});
  CHECK(r.code == cvxn::kExitParse);
  fs::remove_all(dir);
}

TEST_CASE("error codes") {
  CHECK(cvxn_run({"wedges", "--body", corpus("disk.json")}).code == cvxn::kExitUnsupported);
  const Result u = cvxn_run({"estimate", "--body", corpus("cube.json"), "--counter", "diameters", "--samples", "100"});
  CHECK(u.code == cvxn::kExitUnsupported);
  const auto e = nlohmann::json::parse(u.err);
  CHECK(e["error"] == "unsupported");
  CHECK(e["reason"].get<std::string>().find("polytopes") != std::string::npos);
  CHECK(cvxn_run({"estimate", "--body", "/nonexistent.json"}).code == cvxn::kExitParse);
  CHECK(cvxn_run({"field", "--body", corpus("disk.json"), "--grid", "12by3"}).code == cvxn::kExitParse);
  CHECK(cvxn_run({"estimate", "--body", corpus("square.json"), "--counter", "diameters", "--samples", "100"}).code ==
        cvxn::kExitGeometry);
  CHECK(cvxn_run({"frobnicate"}).code == cvxn::kExitUsage);
  CHECK(cvxn_run({}).code == cvxn::kExitUsage);
  CHECK(cvxn_run({"--help"}).code == 0);
}

TEST_CASE("identical arguments give identical files, whatever the thread count") {
  namespace fs = std::filesystem;
  const fs::path a = fs::temp_directory_path() / "cvxn_out_a", b = fs::temp_directory_path() / "cvxn_out_b";
  fs::remove_all(a), fs::remove_all(b);
  const std::vector<std::string> base{"field", "--body", corpus("reuleaux3.json"), "--grid", "40x30"};
  auto with = [&](const fs::path& dir, const char* threads) {
    auto v = base;
    v.insert(v.end(), {"--out", dir.string(), "--threads", threads});
    return cvxn_run(v);
  };
  REQUIRE(with(a, "1").code == 0);
  REQUIRE(with(b, "3").code == 0);
  CHECK(slurp(a / "field.csv") == slurp(b / "field.csv"));
  CHECK(slurp(a / "field.pgm") == slurp(b / "field.pgm"));
  CHECK(slurp(a / "field.pgm").rfind("P5\n40 30\n255\n", 0) == 0);

  const std::vector<std::string> est{"estimate", "--body", corpus("ellipse.json"), "--samples", "3000", "--seed", "4"};
  auto e1 = est, e2 = est;
  e1.insert(e1.end(), {"--threads", "1"});
  e2.insert(e2.end(), {"--threads", "2"});
  CHECK(cvxn_run(e1).out == cvxn_run(e2).out);
  fs::remove_all(a), fs::remove_all(b);
}

TEST_CASE("csv commands") {
  const Result w = cvxn_run({"wedges", "--body", corpus("square.json")});
  REQUIRE(w.code == 0);
  CHECK(w.out.find("face_kind,face_index,area,cumulative_I") != std::string::npos);
  CHECK(w.out.find("vertex,3,") != std::string::npos);
  const Result e = cvxn_run({"evolute", "--body", corpus("fourier_oval.json"), "--points", "16"});
  CHECK(e.out.find("theta,rho,cx,cy") != std::string::npos);
  const Result f = cvxn_run({"flow", "--body", corpus("fourier_oval.json"), "--kind", "outward_eikonal", "--t-end",
                             "1", "--steps", "2", "--samples", "2000", "--seed", "3"});
  REQUIRE(f.code == 0);
  CHECK(f.out.find("t,n_mean,n_lo,n_hi,n_surf_mean,area,perimeter") != std::string::npos);
  const Result d = cvxn_run({"discretize", "--body", corpus("ellipse.json"), "--k", "8,16", "--samples", "2000"});
  REQUIRE(d.code == 0);
  CHECK(d.out.find("\n16,") != std::string::npos);
  const Result s = cvxn_run({"diameters", "--body", corpus("ellipse.json"), "--theta-sweep", "--points", "8"});
  REQUIRE(s.code == 0);
  const auto row = s.out.find("\n0.00000000000e+00,");
  REQUIRE(row != std::string::npos);
  CHECK(std::stod(s.out.substr(row + 19)) == doctest::Approx(4.0).epsilon(1e-3));
  const Result t = cvxn_run({"tau", "--norm", corpus("disk.json")});
  REQUIRE(t.code == 0);
  CHECK(body_json(t.out)["tau"].get<double>() == doctest::Approx(0.826993343).epsilon(1e-8));
}
