#include "mobius/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "mobius/error.hpp"
#include "mobius/numeric.hpp"
#include "mobius/paths.hpp"

namespace mobius {

KernelMatrix::KernelMatrix(PointId basepoint, std::vector<PointId> domain,
                           std::vector<std::string> labels, DistanceMatrix values)
    : basepoint_(basepoint), domain_(std::move(domain)), labels_(std::move(labels)),
      values_(std::move(values)) {
  if (domain_.size() != values_.size() || labels_.size() != values_.size()) {
    throw Error(ErrorKind::Shape, "kernel domain, labels and values disagree in size");
  }
}

std::optional<std::size_t> KernelMatrix::index_of(PointId base_point) const {
  const auto it = std::find(domain_.begin(), domain_.end(), base_point);
  if (it == domain_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - domain_.begin());
}

PointId to_inverted(PointId p, PointId x) {
  if (x == p) throw Error(ErrorKind::Domain, "the basepoint is not part of the inverted space");
  return PointId{x.index > p.index ? x.index - 1 : x.index};
}

PointId from_inverted(PointId p, PointId k) {
  return PointId{k.index >= p.index ? k.index + 1 : k.index};
}

namespace {

void check_point(const ExtendedMetricSpace& space, PointId p) {
  if (p.index >= space.size()) throw Error(ErrorKind::Parameter, "basepoint index out of range");
}

}  // namespace

KernelMatrix inversion_kernel(const ExtendedMetricSpace& space, PointId p) {
  check_point(space, p);
  if (space.is_remote(p)) {
    throw Error(ErrorKind::Domain, "cannot invert at the infinitely remote point");
  }
  const std::size_t n = space.size();
  std::vector<PointId> domain;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == p.index) continue;
    domain.push_back(PointId{i});
    labels.push_back(space.labels()[i]);
  }
  const auto& d = space.matrix();
  const std::size_t m = domain.size();
  DistanceMatrix values(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      const PointId x = domain[a], y = domain[b];
      double v;
      if (space.is_remote(x)) {
        v = 1.0 / d(p.index, y.index);
      } else if (space.is_remote(y)) {
        v = 1.0 / d(p.index, x.index);
      } else {
        v = d(x.index, y.index) / (d(p.index, x.index) * d(p.index, y.index));
      }
      values(a, b) = v;
    }
  }
  return KernelMatrix(p, std::move(domain), std::move(labels), std::move(values));
}

ExtendedMetricSpace chain_metric_of(const KernelMatrix& kernel) {
  DistanceMatrix shortest = all_pairs_shortest(kernel.matrix());
  const std::size_t m = shortest.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && !(shortest(i, j) > 0.0)) {
        throw Error(ErrorKind::Degeneracy, "chain metric vanishes between '" + kernel.labels()[i] +
                                               "' and '" + kernel.labels()[j] + "'");
      }
    }
  }
  return ExtendedMetricSpace(kernel.labels(), std::move(shortest));
}

ExtendedMetricSpace chain_metric(const ExtendedMetricSpace& space, PointId p) {
  return chain_metric_of(inversion_kernel(space, p));
}

std::vector<PointId> witness_chain(const KernelMatrix& kernel, PointId x, PointId y) {
  if (x.index >= kernel.size() || y.index >= kernel.size()) {
    throw Error(ErrorKind::Parameter, "chain endpoint out of range");
  }
  const DistanceMatrix shortest = all_pairs_shortest(kernel.matrix());
  std::vector<PointId> out;
  for (auto v : lexicographic_shortest_path(kernel.matrix(), shortest, x.index, y.index)) {
    out.push_back(PointId{v});
  }
  return out;
}

KernelMatrix sphericalization_kernel(const ExtendedMetricSpace& space, PointId p) {
  check_point(space, p);
  if (space.remote()) {
    throw Error(ErrorKind::Domain, "sphericalization needs a space without remote point");
  }
  const auto& d = space.matrix();
  const std::size_t n = space.size();
  std::vector<PointId> domain;
  for (std::size_t i = 0; i < n; ++i) domain.push_back(PointId{i});
  DistanceMatrix values(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      values(x, y) = d(x, y) / ((d(x, p.index) + 1.0) * (d(y, p.index) + 1.0));
    }
  }
  return KernelMatrix(p, std::move(domain), space.labels(), std::move(values));
}

ExtendedMetricSpace sphericalized_metric(const ExtendedMetricSpace& space, PointId p) {
  return chain_metric_of(sphericalization_kernel(space, p));
}

ValidationReport validate_weighting(const QuasiMetricSpace& space, const LambdaWeighting& w) {
  const std::size_t n = space.size();
  if (w.lambda.size() != n) {
    throw Error(ErrorKind::Shape, "weighting has " + std::to_string(w.lambda.size()) +
                                      " values for a " + std::to_string(n) + "-point space");
  }
  ValidationReport report;
  if (!(w.L > 0.0) || !std::isfinite(w.L)) {
    report.violations.push_back({ViolationKind::WeightingParameter, {}, w.L, 0.0});
  }
  if (!(w.k_prime >= space.K()) || !std::isfinite(w.k_prime)) {
    report.violations.push_back({ViolationKind::WeightingParameter, {}, space.K(), w.k_prime});
  }
  for (std::size_t x = 0; x < n; ++x) {
    const double lx = w.lambda[x];
    if (std::isnan(lx) || lx < 0.0) {
      report.violations.push_back({ViolationKind::WeightingParameter, {PointId{x}}, lx, 0.0});
    }
    if (std::isinf(lx) != space.is_remote(PointId{x})) {
      report.violations.push_back({ViolationKind::WeightingRemote, {PointId{x}}, lx,
                                   space.is_remote(PointId{x}) ? kInf : 0.0});
    }
  }
  if (!report.ok()) return report;

  const auto& d = space.matrix();
  const double kp = w.k_prime;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const double lx = w.L * w.lambda[x];
      const double ly = w.L * w.lambda[y];
      const double upper = kp * std::max(lx, ly);
      if (x < y && !approx_le(d(x, y), upper)) {
        report.violations.push_back({ViolationKind::WeightingUpper, {PointId{x}, PointId{y}}, d(x, y), upper});
      }
      const double lower = kp * std::max(d(x, y), ly);
      if (!approx_le(lx, lower)) {
        report.violations.push_back({ViolationKind::WeightingLower, {PointId{x}, PointId{y}}, lx, lower});
      }
    }
  }
  return report;
}

std::optional<PointId> lambda_zero(const LambdaWeighting& w) {
  std::optional<PointId> zero;
  for (std::size_t i = 0; i < w.lambda.size(); ++i) {
    if (w.lambda[i] != 0.0) continue;
    if (zero) throw Error(ErrorKind::Domain, "λ vanishes at more than one point");
    zero = PointId{i};
  }
  return zero;
}

QuasiMetricSpace lambda_transform(const QuasiMetricSpace& space, const LambdaWeighting& w) {
  const auto report = validate_weighting(space, w);
  if (!report.ok()) throw Error(ErrorKind::Weighting, report.summary());
  const auto zero = lambda_zero(w);
  if (space.remote_set().size() > 1) {
    throw Error(ErrorKind::Domain,
                "λ-transform needs at most one remote point; distinct remote points would collapse");
  }

  const std::size_t n = space.size();
  const auto& d = space.matrix();
  DistanceMatrix out(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const bool x_zero = zero && zero->index == x;
      const bool y_zero = zero && zero->index == y;
      const bool x_remote = space.is_remote(PointId{x});
      const bool y_remote = space.is_remote(PointId{y});
      double v;
      if (x_zero || y_zero) {
        v = kInf;
      } else if (x_remote) {
        v = w.L / w.lambda[y];
      } else if (y_remote) {
        v = w.L / w.lambda[x];
      } else {
        v = d(x, y) / (w.lambda[x] * w.lambda[y]);
      }
      out(x, y) = v;
    }
  }
  std::vector<PointId> remote;
  if (zero) remote.push_back(*zero);
  return QuasiMetricSpace(space.labels(), std::move(out), w.k_prime * w.k_prime, std::move(remote));
}

}  // namespace mobius
