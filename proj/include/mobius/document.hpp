#pragma once

// Plain-text space documents:
//
//   name: line3
//   kind: metric            # or quasi
//   points: a b c
//   remote: c               # metric only, optional
//   K: 2                    # quasi only, required
//   remote_set: a b         # quasi only, optional
//   basepoint: a            # optional
//   matrix:
//   0 1 inf
//   1 0 inf
//   inf inf 0
//
// Labels are whitespace-free tokens. Numbers are written with 17 significant
// digits and +inf as "inf", so documents round-trip exactly.

#include <optional>
#include <string>
#include <vector>

#include "mobius/distance_matrix.hpp"
#include "mobius/space.hpp"

namespace mobius {

enum class SpaceKind { Metric, Quasi };

struct SpaceDocument {
  std::string name;
  SpaceKind kind = SpaceKind::Metric;
  std::vector<std::string> points;
  DistanceMatrix matrix;
  std::optional<std::string> remote;
  std::optional<double> K;
  std::vector<std::string> remote_set;
  std::optional<std::string> basepoint;

  bool operator==(const SpaceDocument&) const = default;
};

/// Throws ErrorKind::Parse on malformed text and ErrorKind::Shape on a
/// non-square matrix.
SpaceDocument parse_document(const std::string& text);
std::string format_document(const SpaceDocument& doc);

SpaceDocument read_document(const std::string& path);
void write_document(const std::string& path, const SpaceDocument& doc);

SpaceDocument make_document(const std::string& name, const ExtendedMetricSpace& space,
                            std::optional<PointId> basepoint = {});
SpaceDocument make_document(const std::string& name, const QuasiMetricSpace& space,
                            std::optional<PointId> basepoint = {});

/// Throws ErrorKind::Parse for unknown labels or the wrong kind, and the space
/// constructors' errors for invalid contents.
ExtendedMetricSpace to_metric_space(const SpaceDocument& doc);
QuasiMetricSpace to_quasi_space(const SpaceDocument& doc);

std::optional<PointId> basepoint_of(const SpaceDocument& doc);

std::string format_number(double value);
/// Accepts "inf" and anything std::from_chars reads as a double.
double parse_number(const std::string& token);

}  // namespace mobius
