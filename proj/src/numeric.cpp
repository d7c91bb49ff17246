#include "mobius/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace mobius {

bool approx_le(double lhs, double rhs, double rel_tol, double abs_tol) noexcept {
  if (std::isnan(lhs) || std::isnan(rhs)) return false;
  if (lhs <= rhs) return true;
  if (std::isinf(lhs) || std::isinf(rhs)) return false;
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return lhs - rhs <= std::max(abs_tol, rel_tol * scale);
}

bool approx_eq(double a, double b, double rel_tol, double abs_tol) noexcept {
  return approx_le(a, b, rel_tol, abs_tol) && approx_le(b, a, rel_tol, abs_tol);
}

}  // namespace mobius
