#pragma once

// Metric inversion, sphericalization and the λ-transform.
//
//   i_p(x,y) = d(x,y) / (d(p,x) d(p,y)),   i_p(ω,x) = 1 / d(p,x)
//   s_p(x,y) = d(x,y) / ((d(x,p)+1) (d(y,p)+1))
//   d_λ(x,y) = d(x,y) / (λ(x) λ(y))
//
// The chain metrics d_p and d̂_p are the least chain sums of i_p and s_p, i.e.
// all-pairs shortest paths on the complete graph weighted by the kernel.

#include <optional>
#include <string>
#include <vector>

#include "mobius/distance_matrix.hpp"
#include "mobius/space.hpp"

namespace mobius {

/// A kernel on a subset of a base space. Kernel index k corresponds to base
/// point domain()[k]; for i_p the basepoint is excluded from the domain.
class KernelMatrix {
 public:
  KernelMatrix(PointId basepoint, std::vector<PointId> domain, std::vector<std::string> labels,
               DistanceMatrix values);

  PointId basepoint() const noexcept { return basepoint_; }
  const std::vector<PointId>& domain() const noexcept { return domain_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const DistanceMatrix& matrix() const noexcept { return values_; }
  std::size_t size() const noexcept { return domain_.size(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return values_(i, j); }

  std::optional<std::size_t> index_of(PointId base_point) const;

 private:
  PointId basepoint_;
  std::vector<PointId> domain_;
  std::vector<std::string> labels_;
  DistanceMatrix values_;
};

/// Index of base point `x` in the inverted space X∖{p} and back.
PointId to_inverted(PointId p, PointId x);
PointId from_inverted(PointId p, PointId k);

/// Throws ErrorKind::Domain when p is the remote point.
KernelMatrix inversion_kernel(const ExtendedMetricSpace& space, PointId p);

/// (X∖{p}, d_p). Chains may pass through ω, which becomes an ordinary point.
ExtendedMetricSpace chain_metric(const ExtendedMetricSpace& space, PointId p);

/// Shortest-chain metric of an arbitrary kernel; throws ErrorKind::Degeneracy
/// if two distinct points end up at distance 0.
ExtendedMetricSpace chain_metric_of(const KernelMatrix& kernel);

/// Minimal chain realizing d_p(x,y) (kernel indices), lexicographically smallest
/// among ties.
std::vector<PointId> witness_chain(const KernelMatrix& kernel, PointId x, PointId y);

/// Requires a space without remote point; p stays in the domain.
KernelMatrix sphericalization_kernel(const ExtendedMetricSpace& space, PointId p);
ExtendedMetricSpace sphericalized_metric(const ExtendedMetricSpace& space, PointId p);

struct LambdaWeighting {
  std::vector<double> lambda;  // per point, in [0, +inf]
  double L = 1.0;
  double k_prime = 1.0;
};

/// Checks λ⁻¹(∞) = remote set, L > 0, K' >= K and both pairwise λ inequalities.
ValidationReport validate_weighting(const QuasiMetricSpace& space, const LambdaWeighting& w);

/// The zero of λ, if any. Throws ErrorKind::Domain for more than one zero.
std::optional<PointId> lambda_zero(const LambdaWeighting& w);

/// (X, d_λ) as a K'^2-quasi-metric whose remote set is λ⁻¹(0).
/// Throws ErrorKind::Weighting for an invalid weighting and ErrorKind::Domain
/// when λ has several zeros or the base has several remote points.
QuasiMetricSpace lambda_transform(const QuasiMetricSpace& space, const LambdaWeighting& w);

}  // namespace mobius
