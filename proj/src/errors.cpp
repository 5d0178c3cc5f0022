#include "convexnormals/errors.hpp"

namespace cvxn {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateBody: return "degenerate_body";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Convexity: return "convexity";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Singularity: return "singularity";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::DegenerateConfiguration: return "degenerate_configuration";
  }
  return "unknown";
}

}  // namespace cvxn
