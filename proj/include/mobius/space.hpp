#pragma once

// Finite extended-metric and K-quasi-metric spaces.
//
// An ExtendedMetricSpace may carry one infinitely remote point ω at distance
// +inf from every other point. A QuasiMetricSpace satisfies
// d(x,y) <= K * max{d(x,z), d(z,y)} on finite triples and may carry a whole
// remote set. Both are immutable once constructed; constructors validate.

#include <array>
#include <compare>
#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mobius/distance_matrix.hpp"

namespace mobius {

struct PointId {
  std::size_t index = 0;
  auto operator<=>(const PointId&) const = default;
};

/// Anything that exposes a square distance-like matrix.
template <typename S>
concept FiniteSpace = requires(const S& s) {
  { s.matrix() } -> std::same_as<const DistanceMatrix&>;
  { s.size() } -> std::convertible_to<std::size_t>;
};

enum class ViolationKind {
  Asymmetry,
  NonzeroDiagonal,
  NonPositive,        // off-diagonal entry <= 0 or NaN
  Triangle,
  RemoteRule,         // extended-metric rule for ω, or a stray +inf
  QuasiInequality,
  FinitenessPattern,  // quasi: finite iff both points outside the remote set
  WeightingRemote,    // lambda^{-1}(inf) differs from the remote set
  WeightingUpper,     // d(x,y) <= K' max{L λ(x), L λ(y)} fails
  WeightingLower,     // L λ(x) <= K' max{d(x,y), L λ(y)} fails
  WeightingParameter,
};

const char* to_string(ViolationKind kind) noexcept;

struct Violation {
  ViolationKind kind;
  std::vector<PointId> witness;  // pair or triple
  double lhs = 0.0;
  double rhs = 0.0;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::string summary(std::size_t max_items = 5) const;
};

/// Checks the extended-metric axioms. Throws ErrorKind::Size below 3 points and
/// ErrorKind::Parameter when `remote` is out of range.
ValidationReport validate_metric(const DistanceMatrix& matrix, std::optional<PointId> remote = {});

/// Checks the K-quasi-metric axioms with remote set `remote_set`.
/// Throws ErrorKind::Parameter when K < 1.
ValidationReport validate_quasi_metric(const DistanceMatrix& matrix, double K,
                                       const std::vector<PointId>& remote_set = {});

class ExtendedMetricSpace {
 public:
  /// Throws ErrorKind::Shape on a label/matrix size mismatch, ErrorKind::Contract on
  /// duplicate labels or any axiom violation.
  ExtendedMetricSpace(std::vector<std::string> labels, DistanceMatrix matrix,
                      std::optional<PointId> remote = {});

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(PointId p) const { return labels_.at(p.index); }
  const DistanceMatrix& matrix() const noexcept { return matrix_; }
  double distance(PointId x, PointId y) const noexcept { return matrix_(x.index, y.index); }

  std::optional<PointId> remote() const noexcept { return remote_; }
  bool is_remote(PointId p) const noexcept { return remote_ && *remote_ == p; }
  std::optional<PointId> find(const std::string& label) const;

  bool operator==(const ExtendedMetricSpace&) const = default;

 private:
  std::vector<std::string> labels_;
  DistanceMatrix matrix_;
  std::optional<PointId> remote_;
};

class QuasiMetricSpace {
 public:
  QuasiMetricSpace(std::vector<std::string> labels, DistanceMatrix matrix, double K,
                   std::vector<PointId> remote_set = {});

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(PointId p) const { return labels_.at(p.index); }
  const DistanceMatrix& matrix() const noexcept { return matrix_; }
  double distance(PointId x, PointId y) const noexcept { return matrix_(x.index, y.index); }
  double K() const noexcept { return K_; }

  /// Sorted, duplicate-free.
  const std::vector<PointId>& remote_set() const noexcept { return remote_set_; }
  bool is_remote(PointId p) const noexcept;
  std::optional<PointId> find(const std::string& label) const;

  bool operator==(const QuasiMetricSpace&) const = default;

 private:
  std::vector<std::string> labels_;
  DistanceMatrix matrix_;
  double K_ = 1.0;
  std::vector<PointId> remote_set_;
};

/// A metric is a 2-quasi-metric; the remote point becomes the remote set.
QuasiMetricSpace to_quasi(const ExtendedMetricSpace& space, double K = 2.0);

/// Appends an infinitely remote point labelled "∞". Throws ErrorKind::State when
/// the space already has one.
ExtendedMetricSpace complete_with_remote(const ExtendedMetricSpace& space);

/// Induced subspace without `p`. Throws ErrorKind::Size when fewer than 3 points
/// would remain.
ExtendedMetricSpace remove_point(const ExtendedMetricSpace& space, PointId p);
QuasiMetricSpace remove_point(const QuasiMetricSpace& space, PointId p);

struct PtolemyResult {
  bool holds = true;
  std::optional<std::array<PointId, 4>> witness;
};

/// Ptolemy inequality over all quadruples of non-remote points, all three pairings.
PtolemyResult is_ptolemy(const ExtendedMetricSpace& space);

/// Rows whose off-diagonal entries are all +inf.
std::vector<PointId> remote_points(const DistanceMatrix& matrix);

}  // namespace mobius
