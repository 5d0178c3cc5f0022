#include "convexnormals/body_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "convexnormals/errors.hpp"
#include "json.hpp"

namespace cvxn {

using nlohmann::json;

const Body2& LoadedBody::planar_body() const {
  if (!planar()) fail(ErrorKind::Unsupported, "command needs a planar body, got " + type);
  return std::get<Body2>(body);
}

const Polytope3& LoadedBody::solid() const {
  if (planar()) fail(ErrorKind::Unsupported, "command needs a polytope, got " + type);
  return std::get<Polytope3>(body);
}

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  fail(ErrorKind::Parse, "field '" + field + "': " + what);
}

const json& require(const json& j, const char* key) {
  if (!j.contains(key)) field_error(key, "missing");
  return j.at(key);
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) field_error(field, "expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& field) {
  if (!j.is_number_integer()) field_error(field, "expected an integer");
  return j.get<int>();
}

std::vector<double> numbers(const json& j, const std::string& field) {
  if (!j.is_array()) field_error(field, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::variant<Body2, Polytope3> build(const json& j, const std::string& type) {
  if (type == "polygon") {
    const json& v = require(j, "vertices");
    if (!v.is_array()) field_error("vertices", "expected an array of [x, y]");
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string f = "vertices[" + std::to_string(i) + "]";
      const auto xy = numbers(v[i], f);
      if (xy.size() != 2) field_error(f, "expected [x, y]");
      pts.push_back({xy[0], xy[1]});
    }
    return Body2{build_polygon(pts)};
  }
  if (type == "support2d") {
    const double a0 = number(require(j, "a0"), "a0");
    const auto c = j.contains("cos") ? numbers(j["cos"], "cos") : std::vector<double>{};
    const auto s = j.contains("sin") ? numbers(j["sin"], "sin") : std::vector<double>{};
    return Body2{SmoothBody2::create(a0, c, s)};
  }
  if (type == "reuleaux") {
    return Body2{build_reuleaux(integer(require(j, "sides"), "sides"), number(require(j, "width"), "width"))};
  }
  if (type == "disk") {
    Point2 c{0.0, 0.0};
    if (j.contains("center")) {
      const auto xy = numbers(j["center"], "center");
      if (xy.size() != 2) field_error("center", "expected [x, y]");
      c = {xy[0], xy[1]};
    }
    return Body2{SmoothBody2::disk(number(require(j, "radius"), "radius"), c)};
  }
  if (type == "ellipse") {
    const int degree = j.contains("degree") ? integer(j["degree"], "degree") : 24;
    return Body2{fit_ellipse(number(require(j, "a"), "a"), number(require(j, "b"), "b"), degree).body};
  }
  if (type == "polytope3") {
    const json& v = require(j, "vertices");
    const json& f = require(j, "facets");
    if (!v.is_array()) field_error("vertices", "expected an array of [x, y, z]");
    if (!f.is_array()) field_error("facets", "expected an array of index loops");
    std::vector<Vec3> pts;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string name = "vertices[" + std::to_string(i) + "]";
      const auto xyz = numbers(v[i], name);
      if (xyz.size() != 3) field_error(name, "expected [x, y, z]");
      pts.push_back({xyz[0], xyz[1], xyz[2]});
    }
    std::vector<std::vector<int>> loops;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const std::string name = "facets[" + std::to_string(i) + "]";
      if (!f[i].is_array()) field_error(name, "expected an array of vertex indices");
      std::vector<int> loop;
      for (std::size_t k = 0; k < f[i].size(); ++k) {
        const int idx = integer(f[i][k], name + "[" + std::to_string(k) + "]");
        if (idx < 0 || idx >= static_cast<int>(pts.size())) field_error(name, "vertex index out of range");
        loop.push_back(idx);
      }
      loops.push_back(std::move(loop));
    }
    return build_polytope(std::move(pts), std::move(loops));
  }
  if (type == "standard3") {
    const json& n = require(j, "name");
    if (!n.is_string()) field_error("name", "expected a string");
    return standard_polytope(n.get<std::string>());
  }
  field_error("type", "unknown body type '" + type + "'");
}

}  // namespace

LoadedBody parse_body(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line number.
    std::size_t line = 1;
    for (std::size_t i = 0; i < std::min(e.byte, text.size()); ++i)
      if (text[i] == '\n') ++line;
    std::ostringstream os;
    os << "malformed JSON at line " << line << ": " << e.what();
    fail(ErrorKind::Parse, os.str());
  }
  if (!j.is_object()) fail(ErrorKind::Parse, "body spec must be a JSON object");
  const json& t = require(j, "type");
  if (!t.is_string()) field_error("type", "expected a string");
  LoadedBody out{build(j, t.get<std::string>()), t.get<std::string>(), fnv1a(j.dump())};
  return out;
}

LoadedBody load_body_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open body file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_body(ss.str());
}

}  // namespace cvxn
