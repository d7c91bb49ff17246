#pragma once

#include <limits>

namespace mobius {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Relative tolerance used for every axiom, sandwich and chain-link comparison.
inline constexpr double kRelTol = 1e-9;
/// Absolute floor for the tolerance near zero.
inline constexpr double kAbsTol = 1e-12;

/// lhs <= rhs up to max(abs_tol, rel_tol * max(|lhs|, |rhs|)). +inf on the right
/// accepts anything; +inf on the left is only accepted by +inf.
bool approx_le(double lhs, double rhs, double rel_tol = kRelTol, double abs_tol = kAbsTol) noexcept;

bool approx_eq(double a, double b, double rel_tol = kRelTol, double abs_tol = kAbsTol) noexcept;

}  // namespace mobius
