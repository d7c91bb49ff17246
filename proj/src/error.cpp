#include "mobius/error.hpp"

namespace mobius {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Shape: return "shape";
    case ErrorKind::Size: return "size";
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::State: return "state";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Degeneracy: return "degeneracy";
    case ErrorKind::Contract: return "contract";
    case ErrorKind::Weighting: return "weighting";
    case ErrorKind::Undefined: return "undefined";
    case ErrorKind::Generation: return "generation";
    case ErrorKind::Counterexample: return "counterexample";
    case ErrorKind::ExactLimit: return "exact-limit";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + " error: " + message), kind_(kind) {}

}  // namespace mobius
