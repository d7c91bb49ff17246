#pragma once

// Deterministic test spaces. Every generator is a pure function of its
// arguments; random models draw from std::mt19937_64 seeded with the given seed.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mobius/chains.hpp"
#include "mobius/space.hpp"
#include "mobius/transforms.hpp"

namespace mobius {

struct CantorSpec {
  std::size_t k = 2;      // alphabet size, at most 36
  std::size_t depth = 1;  // word length
  double a = 0.5;         // in (0,1)
  std::size_t point_cap = 1024;
};

/// Words of length `depth` over {0..k-1} with d(x,y) = a^L(x,y), L the common
/// prefix length. Throws ErrorKind::Parameter on a bad spec and
/// ErrorKind::Size when k^depth exceeds the cap.
ExtendedMetricSpace cantor_space(const CantorSpec& spec);

/// Euclidean distances between the given coordinates. Throws ErrorKind::Size
/// below 3 points, ErrorKind::Shape on mixed dimensions and
/// ErrorKind::Degeneracy on duplicate points.
ExtendedMetricSpace euclidean_space(const std::vector<std::vector<double>>& coords,
                                    std::vector<std::string> labels = {});

struct RayInstance {
  ExtendedMetricSpace space;
  PointId p;  // origin of the ray, index 0
};

/// p at 0 plus x_i = 1/u_i with u_i evenly spaced from u_lo (i = 0) to u_hi.
/// In (X, d_p) the points sit at u_i, so the sequence is a 1/(n-1)-chain.
RayInstance inversion_ray(std::size_t n, double u_lo, double u_hi);

enum class RandomModel { Ultrametric, PerturbedGrid, Euclidean, Graph };

const char* to_string(RandomModel model) noexcept;

/// Ultrametric: random hierarchical merges at increasing heights.
/// PerturbedGrid: unit lattice in the plane, each coordinate jittered by
///   uniform[-jitter, jitter]; jitter must lie in [0, 0.5).
/// Euclidean: uniform points in the unit square.
/// Graph: shortest-path metric of the complete graph with edge weights
///   uniform in [0.1, 1]; in general not Ptolemaic.
ExtendedMetricSpace random_metric_space(std::uint64_t seed, std::size_t n, RandomModel model,
                                        double jitter = 0.25);

/// Powers |x-y|^α of planar distances with α in [0.5, 0.9] log2 K and a symmetric
/// multiplicative noise in [1, 1.1], redrawn until the K-inequality validates. Requires K > 1.
/// Throws ErrorKind::Generation when `budget` draws are exhausted.
QuasiMetricSpace random_quasi_space(std::uint64_t seed, std::size_t n, double K, std::size_t budget = 64);

struct LambdaInstance {
  QuasiMetricSpace space;
  LambdaWeighting weighting;
  PointId p;  // λ(p) = 0
};

/// λ(x) = d(p,x) g(x) / L with g in [1, c], which is valid for K' = cK.
/// λ(remote) = +inf.
LambdaWeighting distance_weighting(const QuasiMetricSpace& space, PointId p, double L,
                                   const std::vector<double>& g, double k_prime);

/// A random K-quasi-metric (ultrametric when K = 1) on n points, optionally
/// with a remote point appended, weighted by distance_weighting.
LambdaInstance random_lambda_instance(std::uint64_t seed, std::size_t n, double K, double c,
                                      bool with_remote);

struct LambdaChainInstance {
  QuasiMetricSpace space;
  LambdaWeighting weighting;
  PointId p;
  Chain chain;  // a θ-chain of the λ-transformed space
};

/// Ray p = 0, x_0 = 1, ..., x_m = far with Lλ(x) chosen near the largest value
/// the weighting inequalities allow, so that d_λ-links stay below θ with few
/// points. The base is the line metric declared as a K-quasi-metric.
/// Throws ErrorKind::Generation when the construction stalls.
LambdaChainInstance lambda_chain_instance(double k_prime, double theta, double K = 2.0, double far = 1e4,
                                          std::size_t max_points = 4000);

}  // namespace mobius
