#include "mobius/space.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "mobius/error.hpp"
#include "mobius/numeric.hpp"

namespace mobius {

const char* to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::Asymmetry: return "asymmetry";
    case ViolationKind::NonzeroDiagonal: return "nonzero-diagonal";
    case ViolationKind::NonPositive: return "non-positive";
    case ViolationKind::Triangle: return "triangle";
    case ViolationKind::RemoteRule: return "remote-rule";
    case ViolationKind::QuasiInequality: return "quasi-inequality";
    case ViolationKind::FinitenessPattern: return "finiteness-pattern";
    case ViolationKind::WeightingRemote: return "weighting-remote";
    case ViolationKind::WeightingUpper: return "weighting-upper";
    case ViolationKind::WeightingLower: return "weighting-lower";
    case ViolationKind::WeightingParameter: return "weighting-parameter";
  }
  return "unknown";
}

std::string ValidationReport::summary(std::size_t max_items) const {
  if (ok()) return "ok";
  std::ostringstream out;
  out << violations.size() << " violation(s)";
  for (std::size_t i = 0; i < violations.size() && i < max_items; ++i) {
    const auto& v = violations[i];
    out << "; " << to_string(v.kind) << " (";
    for (std::size_t k = 0; k < v.witness.size(); ++k) {
      out << (k ? "," : "") << v.witness[k].index;
    }
    out << ") " << v.lhs << " > " << v.rhs;
  }
  return out.str();
}

namespace {

void check_size(const DistanceMatrix& m) {
  if (m.size() < 3) {
    throw Error(ErrorKind::Size, "a space needs at least 3 points, got " + std::to_string(m.size()));
  }
}

bool positive(double v) { return !std::isnan(v) && v > 0.0; }

// Diagonal, positivity and symmetry; shared by both validators.
void check_basic(const DistanceMatrix& m, ValidationReport& report) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != 0.0) {
      report.violations.push_back({ViolationKind::NonzeroDiagonal, {PointId{i}}, m(i, i), 0.0});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = m(i, j);
      const double b = m(j, i);
      if (!positive(a) || !positive(b)) {
        report.violations.push_back(
            {ViolationKind::NonPositive, {PointId{i}, PointId{j}}, std::min(a, b), 0.0});
      } else if (!approx_eq(a, b)) {
        report.violations.push_back({ViolationKind::Asymmetry, {PointId{i}, PointId{j}}, a, b});
      }
    }
  }
}

std::vector<bool> membership(std::size_t n, const std::vector<PointId>& ids, const char* what) {
  std::vector<bool> mask(n, false);
  for (auto p : ids) {
    if (p.index >= n) {
      throw Error(ErrorKind::Parameter, std::string(what) + " index " + std::to_string(p.index) +
                                            " out of range");
    }
    mask[p.index] = true;
  }
  return mask;
}

std::vector<std::string> checked_labels(std::vector<std::string> labels, const DistanceMatrix& m) {
  if (labels.size() != m.size()) {
    throw Error(ErrorKind::Shape, std::to_string(labels.size()) + " labels for a " +
                                      std::to_string(m.size()) + "-point matrix");
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw Error(ErrorKind::Contract, "duplicate label '" + l + "'");
  }
  return labels;
}

std::optional<PointId> find_label(const std::vector<std::string>& labels, const std::string& label) {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return PointId{static_cast<std::size_t>(it - labels.begin())};
}

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> keep;
  keep.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != skip) keep.push_back(i);
  }
  return keep;
}

}  // namespace

ValidationReport validate_metric(const DistanceMatrix& m, std::optional<PointId> remote) {
  check_size(m);
  const std::size_t n = m.size();
  if (remote && remote->index >= n) {
    throw Error(ErrorKind::Parameter, "remote index " + std::to_string(remote->index) + " out of range");
  }
  ValidationReport report;
  check_basic(m, report);

  auto is_remote = [&](std::size_t i) { return remote && remote->index == i; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool should_be_inf = is_remote(i) || is_remote(j);
      for (double v : {m(i, j), m(j, i)}) {
        if (std::isinf(v) != should_be_inf) {
          report.violations.push_back(
              {ViolationKind::RemoteRule, {PointId{i}, PointId{j}}, v, should_be_inf ? kInf : 0.0});
          break;
        }
      }
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const double dxy = m(x, y);
      if (!std::isfinite(dxy)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        const double via = m(x, z) + m(z, y);
        if (!std::isfinite(via)) continue;
        if (!approx_le(dxy, via)) {
          report.violations.push_back(
              {ViolationKind::Triangle, {PointId{x}, PointId{y}, PointId{z}}, dxy, via});
        }
      }
    }
  }
  return report;
}

ValidationReport validate_quasi_metric(const DistanceMatrix& m, double K,
                                       const std::vector<PointId>& remote_set) {
  if (!(K >= 1.0) || !std::isfinite(K)) {
    throw Error(ErrorKind::Parameter, "quasi-metric constant K must be a finite value >= 1");
  }
  check_size(m);
  const std::size_t n = m.size();
  const auto remote = membership(n, remote_set, "remote set");
  ValidationReport report;
  check_basic(m, report);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool should_be_finite = !remote[i] && !remote[j];
      if (std::isfinite(m(i, j)) != should_be_finite) {
        report.violations.push_back({ViolationKind::FinitenessPattern, {PointId{i}, PointId{j}},
                                     m(i, j), should_be_finite ? 0.0 : kInf});
      }
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const double dxy = m(x, y);
      if (!std::isfinite(dxy)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        const double bound = K * std::max(m(x, z), m(z, y));
        if (!std::isfinite(bound)) continue;
        if (!approx_le(dxy, bound)) {
          report.violations.push_back(
              {ViolationKind::QuasiInequality, {PointId{x}, PointId{y}, PointId{z}}, dxy, bound});
        }
      }
    }
  }
  return report;
}

ExtendedMetricSpace::ExtendedMetricSpace(std::vector<std::string> labels, DistanceMatrix matrix,
                                         std::optional<PointId> remote)
    : labels_(checked_labels(std::move(labels), matrix)), matrix_(std::move(matrix)), remote_(remote) {
  const auto report = validate_metric(matrix_, remote_);
  if (!report.ok()) throw Error(ErrorKind::Contract, "not an extended metric: " + report.summary());
}

std::optional<PointId> ExtendedMetricSpace::find(const std::string& label) const {
  return find_label(labels_, label);
}

QuasiMetricSpace::QuasiMetricSpace(std::vector<std::string> labels, DistanceMatrix matrix, double K,
                                   std::vector<PointId> remote_set)
    : labels_(checked_labels(std::move(labels), matrix)),
      matrix_(std::move(matrix)),
      K_(K),
      remote_set_(std::move(remote_set)) {
  std::sort(remote_set_.begin(), remote_set_.end());
  remote_set_.erase(std::unique(remote_set_.begin(), remote_set_.end()), remote_set_.end());
  const auto report = validate_quasi_metric(matrix_, K_, remote_set_);
  if (!report.ok()) {
    throw Error(ErrorKind::Contract, "not a K-quasi-metric: " + report.summary());
  }
}

bool QuasiMetricSpace::is_remote(PointId p) const noexcept {
  return std::binary_search(remote_set_.begin(), remote_set_.end(), p);
}

std::optional<PointId> QuasiMetricSpace::find(const std::string& label) const {
  return find_label(labels_, label);
}

QuasiMetricSpace to_quasi(const ExtendedMetricSpace& space, double K) {
  std::vector<PointId> remote;
  if (space.remote()) remote.push_back(*space.remote());
  return QuasiMetricSpace(space.labels(), space.matrix(), K, std::move(remote));
}

ExtendedMetricSpace complete_with_remote(const ExtendedMetricSpace& space) {
  if (space.remote()) throw Error(ErrorKind::State, "space already has an infinitely remote point");
  const std::size_t n = space.size();
  DistanceMatrix m(n + 1, kInf);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = space.matrix()(i, j);
  }
  m(n, n) = 0.0;

  auto labels = space.labels();
  std::string omega = "∞";
  while (std::find(labels.begin(), labels.end(), omega) != labels.end()) omega += "'";
  labels.push_back(omega);
  return ExtendedMetricSpace(std::move(labels), std::move(m), PointId{n});
}

ExtendedMetricSpace remove_point(const ExtendedMetricSpace& space, PointId p) {
  const std::size_t n = space.size();
  if (p.index >= n) throw Error(ErrorKind::Parameter, "point index out of range");
  if (n < 4) throw Error(ErrorKind::Size, "removing a point would leave fewer than 3 points");
  const auto keep = all_but(n, p.index);
  std::vector<std::string> labels;
  for (auto i : keep) labels.push_back(space.labels()[i]);
  std::optional<PointId> remote;
  if (auto r = space.remote(); r && *r != p) remote = PointId{r->index > p.index ? r->index - 1 : r->index};
  return ExtendedMetricSpace(std::move(labels), space.matrix().induced(keep), remote);
}

QuasiMetricSpace remove_point(const QuasiMetricSpace& space, PointId p) {
  const std::size_t n = space.size();
  if (p.index >= n) throw Error(ErrorKind::Parameter, "point index out of range");
  if (n < 4) throw Error(ErrorKind::Size, "removing a point would leave fewer than 3 points");
  const auto keep = all_but(n, p.index);
  std::vector<std::string> labels;
  for (auto i : keep) labels.push_back(space.labels()[i]);
  std::vector<PointId> remote;
  for (auto r : space.remote_set()) {
    if (r != p) remote.push_back(PointId{r.index > p.index ? r.index - 1 : r.index});
  }
  return QuasiMetricSpace(std::move(labels), space.matrix().induced(keep), space.K(), std::move(remote));
}

PtolemyResult is_ptolemy(const ExtendedMetricSpace& space) {
  const auto& d = space.matrix();
  std::vector<std::size_t> pts;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!space.is_remote(PointId{i})) pts.push_back(i);
  }
  const std::size_t m = pts.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      for (std::size_t c = b + 1; c < m; ++c) {
        for (std::size_t e = c + 1; e < m; ++e) {
          const auto x = pts[a], y = pts[b], z = pts[c], w = pts[e];
          const double p1 = d(x, y) * d(z, w);
          const double p2 = d(x, z) * d(y, w);
          const double p3 = d(x, w) * d(y, z);
          if (!approx_le(p1, p2 + p3) || !approx_le(p2, p1 + p3) || !approx_le(p3, p1 + p2)) {
            return {false, std::array{PointId{x}, PointId{y}, PointId{z}, PointId{w}}};
          }
        }
      }
    }
  }
  return {};
}

std::vector<PointId> remote_points(const DistanceMatrix& matrix) {
  std::vector<PointId> out;
  const std::size_t n = matrix.size();
  for (std::size_t i = 0; i < n && n > 1; ++i) {
    bool all_inf = true;
    for (std::size_t j = 0; j < n && all_inf; ++j) {
      if (j != i && !std::isinf(matrix(i, j))) all_inf = false;
    }
    if (all_inf) out.push_back(PointId{i});
  }
  return out;
}

}  // namespace mobius
