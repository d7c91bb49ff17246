#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mobius {

enum class ErrorKind {
  Shape,           // malformed matrix or mismatched sizes
  Size,            // point-count preconditions
  Parameter,       // numeric parameter outside its domain
  State,           // operation not valid for the object's current state
  Domain,          // basepoint or weighting outside the operation's domain
  Degeneracy,      // coincident points, zero distances between distinct points
  Contract,        // caller-side precondition (invalid chain, non-bijection, ...)
  Weighting,       // lambda-weighting inequality violated
  Undefined,       // value undefined (e.g. zero cross-ratio denominator)
  Generation,      // random generation could not satisfy its model
  Counterexample,  // a theorem construction failed; never expected
  ExactLimit,      // exact set cover refused beyond its caps
  Parse,           // document or argument parse failure
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mobius
