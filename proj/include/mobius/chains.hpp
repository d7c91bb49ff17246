#pragma once

// θ-chains: sequences x_0..x_n with at least 3 distinct points and every link
// d(x_i, x_{i+1}) <= θ d(x_0, x_n). A space without θ-chains for some θ < 1
// is uniformly disconnected.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mobius/distance_matrix.hpp"
#include "mobius/space.hpp"
#include "mobius/transforms.hpp"

namespace mobius {

struct Chain {
  std::vector<PointId> points;
  double theta = 0.0;
  double endpoints_distance = 0.0;
  std::vector<double> links;
};

/// Why `points` is not a θ-chain in `d`, or nullopt if it is one.
std::optional<std::string> chain_defect(const DistanceMatrix& d, const std::vector<PointId>& points,
                                        double theta);

/// Builds a validated chain; throws ErrorKind::Contract if it is not a θ-chain.
Chain make_chain(const DistanceMatrix& d, std::vector<PointId> points, double theta);

/// Threshold-graph search for a θ-chain from `from` to `to` (fewest links, then
/// smallest indices). Throws ErrorKind::Parameter for θ outside (0,1) and
/// ErrorKind::Contract for an unusable endpoint pair.
std::optional<Chain> find_theta_chain(const DistanceMatrix& d, double theta, PointId from, PointId to);

/// First pair (lexicographic) admitting a θ-chain.
std::optional<Chain> find_any_theta_chain(const DistanceMatrix& d, double theta);

template <FiniteSpace S>
std::optional<Chain> find_theta_chain(const S& s, double theta, PointId from, PointId to) {
  return find_theta_chain(s.matrix(), theta, from, to);
}

struct DisconnectednessReport {
  /// min over pairs of (bottleneck path value) / d(x_0, x_n); at most 1.
  double theta_star = 1.0;
  std::optional<std::pair<PointId, PointId>> witness_pair;
  std::optional<Chain> witness_chain;  // present when theta_star < 1

  /// No θ-chain exists for any θ < 1.
  bool uniformly_disconnected() const noexcept;
};

DisconnectednessReport critical_theta(const DistanceMatrix& d);

template <FiniteSpace S>
DisconnectednessReport critical_theta(const S& s) {
  return critical_theta(s.matrix());
}

/// Radii r_i = d(p, x_i), links and l = d(x_0, x_n) of a chain of (X,d_p),
/// measured in the base space, oriented so that r_n >= r_0.
struct ChainGeometry {
  PointId basepoint;
  std::vector<PointId> base_points;
  std::vector<double> radii;
  std::vector<double> links;
  double endpoints_distance = 0.0;
  bool reversed = false;
};

ChainGeometry chain_geometry(const DistanceMatrix& base, PointId p, std::vector<PointId> base_points);

struct Remark41Report {
  /// l_i / (r_i r_{i+1}) per link, i.e. i_p(x_i, x_{i+1}).
  std::vector<double> link_ratios;
  double necessary_bound = 0.0;   // 4 θ l / (r_n r_0)
  double sufficient_bound = 0.0;  // θ l / (4 r_n r_0)
  bool necessary_holds = true;
  std::optional<std::size_t> first_necessary_failure;
  bool sufficient_holds = true;
};

/// `chain` is a θ-chain of chain_metric(space, p) (its indices). Throws
/// ErrorKind::Contract when it is not.
Remark41Report remark41_check(const ExtendedMetricSpace& space, PointId p, const Chain& chain);

/// Whether l_i/(r_i r_{i+1}) <= θ l / (4 r_n r_0) for every link of the
/// sequence (indices of the inverted space).
bool satisfies_sufficient_condition(const ExtendedMetricSpace& space, PointId p,
                                    const std::vector<PointId>& sequence, double theta);

/// Smallest θ for which the sufficient condition holds for `sequence`.
double sufficient_theta(const ExtendedMetricSpace& space, PointId p,
                        const std::vector<PointId>& sequence);

/// Index s with l_s > l·∛(4θ) and max{r_s, r_{s+1}}·∛(4θ) >= r_0, if any.
std::optional<std::size_t> lemma_index(const ExtendedMetricSpace& space, PointId p, const Chain& chain);

struct TransportResult {
  Chain chain;                       // a chain of the base space (X,d)
  double target_theta = 0.0;
  bool constructed = false;          // false: found by exhaustive fallback
  std::optional<std::size_t> pivot;  // q
};

/// From a θ-chain of (X,d_p) with θ <= 1/32, a ∛(4θ)-chain of (X,d): the pivot
/// construction (x_q, ..., x_0, p) first, exhaustive search as fallback.
/// Throws ErrorKind::Parameter for θ > 1/32, ErrorKind::Contract for an invalid
/// input chain and ErrorKind::Counterexample if neither route yields a chain.
TransportResult transport_chain(const ExtendedMetricSpace& space, PointId p, const Chain& chain);

/// The λ-transform analogue: θ <= 1/K^19, target ∛(θ K'^4), pivot at the zero of λ.
/// Throws ErrorKind::Parameter also when the target constant is not below 1.
TransportResult transport_chain_lambda(const QuasiMetricSpace& space, const LambdaWeighting& w,
                                       const Chain& chain);

}  // namespace mobius
