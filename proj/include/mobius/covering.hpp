#pragma once

// Closed balls, minimum covers by half-radius balls, and doubling constants.

#include <cstddef>
#include <string>
#include <vector>

#include "mobius/distance_matrix.hpp"
#include "mobius/space.hpp"
#include "mobius/transforms.hpp"

namespace mobius {

enum class CoverMode { Exact, Greedy };

const char* to_string(CoverMode mode) noexcept;

struct Ball {
  PointId center;
  double radius = 0.0;
  std::vector<PointId> members;  // ascending
};

struct CoverResult {
  std::size_t count = 0;
  std::vector<Ball> balls;  // ascending by center
};

/// Exact set cover is exponential; it refuses beyond these caps.
struct CoverLimits {
  std::size_t max_points = 64;
  std::size_t max_universe = 32;
};

struct DoublingEntry {
  PointId center;
  double radius = 0.0;
  std::size_t cover_size = 0;
};

struct DoublingReport {
  std::size_t constant = 0;
  PointId witness_center;
  double witness_radius = 0.0;
  CoverMode method = CoverMode::Exact;
  std::vector<DoublingEntry> table;
};

/// {x : d(center, x) <= r}. Throws ErrorKind::Parameter for r infinite, negative or NaN.
Ball ball(const DistanceMatrix& d, PointId center, double r);

/// Covers ball(center, r) by balls of radius r/2 centred anywhere in the space.
/// Exact mode returns the minimum with the lexicographically smallest centre list;
/// greedy returns some valid cover.
CoverResult min_half_cover(const DistanceMatrix& d, PointId center, double r, CoverMode mode,
                           CoverLimits limits = {});

/// Distinct finite positive distances together with their doubles, ascending.
/// Between consecutive values neither the ball nor the half-radius balls change.
std::vector<double> candidate_radii(const DistanceMatrix& d);

DoublingReport doubling_constant(const DistanceMatrix& d, CoverMode mode, CoverLimits limits = {});

template <FiniteSpace S>
Ball ball(const S& s, PointId center, double r) {
  return ball(s.matrix(), center, r);
}

template <FiniteSpace S>
CoverResult min_half_cover(const S& s, PointId center, double r, CoverMode mode,
                           CoverLimits limits = {}) {
  return min_half_cover(s.matrix(), center, r, mode, limits);
}

template <FiniteSpace S>
DoublingReport doubling_constant(const S& s, CoverMode mode, CoverLimits limits = {}) {
  return doubling_constant(s.matrix(), mode, limits);
}

struct DoublingCertificate {
  std::string bound;                   // human-readable form of the bound
  std::size_t source_constant = 0;     // D(X, d)
  std::size_t transformed_constant = 0;
  double exponent = 0.0;
  double bound_value = 0.0;            // D^exponent + 1
  double log_ratio = 0.0;              // log D2 / log D1
  bool passed = false;
};

/// D(X,d_p) <= D(X,d)^10 + 1 with exact covers on both sides.
/// Throws ErrorKind::ExactLimit when the space exceeds `exact_cap` points.
DoublingCertificate check_inversion_doubling(const ExtendedMetricSpace& space, PointId p,
                                             std::size_t exact_cap = 16);

/// ceil(log2(8 K'^10 K)).
double lambda_doubling_exponent(double K, double k_prime);

/// D(X,d_λ) <= D(X,d)^ceil(log2(8 K'^10 K)) + 1 with exact covers on both sides.
DoublingCertificate check_lambda_doubling(const QuasiMetricSpace& space, const LambdaWeighting& w,
                                          std::size_t exact_cap = 16);

}  // namespace mobius
