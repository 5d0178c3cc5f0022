#pragma once

#include <stdexcept>
#include <string>

namespace cvxn {

enum class ErrorKind {
  DegenerateBody,   // fewer than 3 hull vertices, zero area, ...
  Domain,           // query outside the operation's domain
  Convexity,        // body fails the convexity certificate
  Validation,       // malformed polytope / index loops
  Unsupported,      // counter not available for the representation
  Singularity,      // flow or offset past a singular time
  Parse,            // malformed JSON body spec
  DegenerateConfiguration  // evolute / infinite-count queries
};

const char* to_string(ErrorKind kind);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw GeometryError(kind, what);
}

}  // namespace cvxn
