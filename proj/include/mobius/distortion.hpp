#pragma once

// Cross-ratios and empirical distortion of point bijections.
//
//   crt(x1,x2,x3,x4) = d(x1,x3) d(x2,x4) / (d(x1,x4) d(x2,x3))
//
// A quasi-Möbius map satisfies crt(fQ) <= ν(crt(Q)) for a homeomorphism ν; the
// monotone envelope of the observed (crt(Q), crt(fQ)) pairs is the finite
// stand-in for ν.

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "mobius/distance_matrix.hpp"
#include "mobius/space.hpp"

namespace mobius {

struct Quadruple {
  std::array<PointId, 4> ids;
};

/// Throws ErrorKind::Contract unless the four points are pairwise distinct.
Quadruple make_quadruple(PointId x1, PointId x2, PointId x3, PointId x4);

/// Factors at +inf cancel one numerator against one denominator factor.
/// Throws ErrorKind::Undefined for a zero denominator or when the infinite
/// factors do not cancel one-for-one.
double cross_ratio(const DistanceMatrix& d, const Quadruple& q);

template <FiniteSpace S>
double cross_ratio(const S& s, const Quadruple& q) {
  return cross_ratio(s.matrix(), q);
}

struct SamplingPolicy {
  std::size_t full_enumeration_limit = 12;
  std::size_t sample_size = 100000;
  std::uint64_t seed = 0;
};

struct DistortionScatter {
  std::vector<std::pair<double, double>> pairs;  // (t, u)
  std::vector<Quadruple> quadruples;
  std::vector<PointId> mapping;
  std::size_t skipped = 0;  // quadruples with an undefined cross-ratio
  bool sampled = false;
};

/// (crt(Q, source), crt(fQ, target)) over ordered quadruples of distinct points.
/// Throws ErrorKind::Contract when f is not a bijection between equal-size
/// spaces or sends a remote point to a finite one.
DistortionScatter distortion_scatter(const DistanceMatrix& source, const DistanceMatrix& target,
                                     const std::vector<PointId>& f, const SamplingPolicy& policy = {});

struct TripleScatter {
  std::vector<std::pair<double, double>> pairs;  // (d(x1,x2)/d(x1,x3), d'(fx1,fx2)/d'(fx1,fx3))
  std::vector<std::array<PointId, 3>> triples;
  std::size_t skipped = 0;
  bool sampled = false;
};

/// Three-point ratios; triples touching +inf or a zero denominator are skipped.
TripleScatter quasisymmetry_scatter(const DistanceMatrix& source, const DistanceMatrix& target,
                                    const std::vector<PointId>& f, const SamplingPolicy& policy = {});

class MonotoneEnvelope {
 public:
  explicit MonotoneEnvelope(std::vector<std::pair<double, double>> breakpoints);

  /// Least nondecreasing step function above the scatter. Throws
  /// ErrorKind::Contract on an empty scatter.
  static MonotoneEnvelope of(const std::vector<std::pair<double, double>>& scatter);

  const std::vector<std::pair<double, double>>& breakpoints() const noexcept { return breakpoints_; }

  /// 0 below the first breakpoint.
  double operator()(double t) const noexcept;

  bool dominates(const std::vector<std::pair<double, double>>& scatter) const noexcept;

 private:
  std::vector<std::pair<double, double>> breakpoints_;
};

MonotoneEnvelope monotone_envelope(const DistortionScatter& scatter);
MonotoneEnvelope monotone_envelope(const TripleScatter& scatter);

std::vector<PointId> identity_mapping(std::size_t n);

/// Throws ErrorKind::Contract when f is not a permutation.
std::vector<PointId> invert_mapping(const std::vector<PointId>& f);

}  // namespace mobius
