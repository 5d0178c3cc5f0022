#pragma once

#include <string>
#include <variant>

#include "convexnormals/bodies2d.hpp"
#include "convexnormals/bodies3d.hpp"

namespace cvxn {

/// A parsed body file. Planar types: polygon, support2d, reuleaux, disk,
/// ellipse (fitted). Solid types: polytope3, standard3.
struct LoadedBody {
  std::variant<Body2, Polytope3> body;
  std::string type;
  std::string hash;  // 16 hex digits of FNV-1a over the canonical JSON
  bool planar() const { return body.index() == 0; }
  const Body2& planar_body() const;
  const Polytope3& solid() const;
};

/// Throws GeometryError(Parse) naming the line or the offending field.
LoadedBody parse_body(const std::string& json_text);
LoadedBody load_body_file(const std::string& path);

}  // namespace cvxn
