#include "mobius/chains.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>

#include "mobius/error.hpp"
#include "mobius/numeric.hpp"
#include "mobius/paths.hpp"

namespace mobius {

std::optional<std::string> chain_defect(const DistanceMatrix& d, const std::vector<PointId>& points,
                                        double theta) {
  if (!(theta > 0.0 && theta < 1.0)) return "theta must lie in (0,1)";
  if (points.size() < 3) return "a chain needs at least two links";
  std::set<PointId> distinct;
  for (auto p : points) {
    if (p.index >= d.size()) return "point index out of range";
    distinct.insert(p);
  }
  if (distinct.size() < 3) return "a chain needs at least 3 distinct points";
  const double l = d(points.front().index, points.back().index);
  if (!std::isfinite(l) || !(l > 0.0)) return "endpoint distance must be finite and positive";
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double link = d(points[i].index, points[i + 1].index);
    if (!approx_le(link, theta * l)) {
      std::ostringstream out;
      out << "link " << i << " has length " << link << " > theta * l = " << theta * l;
      return out.str();
    }
  }
  return std::nullopt;
}

Chain make_chain(const DistanceMatrix& d, std::vector<PointId> points, double theta) {
  if (auto defect = chain_defect(d, points, theta)) throw Error(ErrorKind::Contract, *defect);
  Chain chain;
  chain.theta = theta;
  chain.endpoints_distance = d(points.front().index, points.back().index);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    chain.links.push_back(d(points[i].index, points[i + 1].index));
  }
  chain.points = std::move(points);
  return chain;
}

std::optional<Chain> find_theta_chain(const DistanceMatrix& d, double theta, PointId from, PointId to) {
  if (!(theta > 0.0 && theta < 1.0)) throw Error(ErrorKind::Parameter, "theta must lie in (0,1)");
  const std::size_t n = d.size();
  if (from.index >= n || to.index >= n) throw Error(ErrorKind::Contract, "chain endpoint out of range");
  if (from == to) throw Error(ErrorKind::Contract, "chain endpoints must be distinct");
  const double l = d(from.index, to.index);
  if (!std::isfinite(l) || !(l > 0.0)) {
    throw Error(ErrorKind::Contract, "chain endpoints need a finite positive distance");
  }
  const double bound = theta * l;

  // Breadth-first search in the threshold graph {d(u,v) <= θ l}, skipping the
  // direct edge, so any path found has at least two links.
  std::vector<std::size_t> parent(n, n);
  std::deque<std::size_t> queue{from.index};
  parent[from.index] = from.index;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < n; ++v) {
      if (parent[v] != n) continue;
      if (u == from.index && v == to.index) continue;
      if (!approx_le(d(u, v), bound)) continue;
      parent[v] = u;
      if (v == to.index) {
        std::vector<PointId> path{to};
        for (std::size_t at = u; at != from.index; at = parent[at]) path.push_back(PointId{at});
        path.push_back(from);
        std::reverse(path.begin(), path.end());
        return make_chain(d, std::move(path), theta);
      }
      queue.push_back(v);
    }
  }
  return std::nullopt;
}

std::optional<Chain> find_any_theta_chain(const DistanceMatrix& d, double theta) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const double l = d(i, j);
      if (!std::isfinite(l) || !(l > 0.0)) continue;
      if (auto chain = find_theta_chain(d, theta, PointId{i}, PointId{j})) return chain;
    }
  }
  return std::nullopt;
}

bool DisconnectednessReport::uniformly_disconnected() const noexcept {
  return !approx_le(theta_star, 1.0 - 1e-9, 0.0, 0.0);
}

DisconnectednessReport critical_theta(const DistanceMatrix& d) {
  const DistanceMatrix bottleneck = all_pairs_bottleneck(d);
  DisconnectednessReport report;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const double l = d(i, j);
      if (!std::isfinite(l) || !(l > 0.0)) continue;  // remote pairs carry no finite ratio
      const double ratio = bottleneck(i, j) / l;
      if (!report.witness_pair || ratio < report.theta_star) {
        report.theta_star = ratio;
        report.witness_pair = {PointId{i}, PointId{j}};
      }
    }
  }
  if (report.witness_pair && report.theta_star < 1.0) {
    report.witness_chain =
        find_theta_chain(d, report.theta_star, report.witness_pair->first, report.witness_pair->second);
  }
  return report;
}

ChainGeometry chain_geometry(const DistanceMatrix& base, PointId p, std::vector<PointId> base_points) {
  ChainGeometry g;
  g.basepoint = p;
  if (base.size() && base(p.index, base_points.front().index) > base(p.index, base_points.back().index)) {
    std::reverse(base_points.begin(), base_points.end());
    g.reversed = true;
  }
  for (auto x : base_points) g.radii.push_back(base(p.index, x.index));
  for (std::size_t i = 0; i + 1 < base_points.size(); ++i) {
    g.links.push_back(base(base_points[i].index, base_points[i + 1].index));
  }
  g.endpoints_distance = base(base_points.front().index, base_points.back().index);
  g.base_points = std::move(base_points);
  return g;
}

namespace {

void require_inverted_chain(const ExtendedMetricSpace& space, PointId p, const Chain& chain) {
  const auto inverted = chain_metric(space, p);
  if (auto defect = chain_defect(inverted.matrix(), chain.points, chain.theta)) {
    throw Error(ErrorKind::Contract, "not a theta-chain of the inverted space: " + *defect);
  }
}

std::vector<PointId> to_base(PointId p, const std::vector<PointId>& inverted_points) {
  std::vector<PointId> out;
  for (auto k : inverted_points) out.push_back(from_inverted(p, k));
  return out;
}

// Pivot construction shared by both transports: q is the least index with
// r_0 <= t r_q, and the candidate is (x_q, ..., x_0, p).
TransportResult pivot_transport(const DistanceMatrix& base, PointId p, std::vector<PointId> base_points,
                                double target) {
  const ChainGeometry g = chain_geometry(base, p, std::move(base_points));
  TransportResult result;
  result.target_theta = target;
  for (std::size_t q = 0; q < g.radii.size(); ++q) {
    if (approx_le(g.radii.front(), target * g.radii[q])) {
      result.pivot = q;
      break;
    }
  }
  if (result.pivot) {
    std::vector<PointId> candidate;
    for (std::size_t i = *result.pivot + 1; i-- > 0;) candidate.push_back(g.base_points[i]);
    candidate.push_back(p);
    if (!chain_defect(base, candidate, target)) {
      result.chain = make_chain(base, std::move(candidate), target);
      result.constructed = true;
      return result;
    }
  }
  if (auto found = find_any_theta_chain(base, target)) {
    result.chain = std::move(*found);
    return result;
  }
  std::ostringstream out;
  out << "no " << target << "-chain in the base space: neither the pivot construction nor "
      << "exhaustive search produced one";
  throw Error(ErrorKind::Counterexample, out.str());
}

}  // namespace

Remark41Report remark41_check(const ExtendedMetricSpace& space, PointId p, const Chain& chain) {
  require_inverted_chain(space, p, chain);
  const KernelMatrix kernel = inversion_kernel(space, p);
  Remark41Report report;
  const double ends = kernel(chain.points.front().index, chain.points.back().index);
  report.necessary_bound = 4.0 * chain.theta * ends;
  report.sufficient_bound = chain.theta * ends / 4.0;
  for (std::size_t i = 0; i + 1 < chain.points.size(); ++i) {
    const double ratio = kernel(chain.points[i].index, chain.points[i + 1].index);
    report.link_ratios.push_back(ratio);
    if (!approx_le(ratio, report.necessary_bound)) {
      report.necessary_holds = false;
      if (!report.first_necessary_failure) report.first_necessary_failure = i;
    }
    if (!approx_le(ratio, report.sufficient_bound)) report.sufficient_holds = false;
  }
  return report;
}

double sufficient_theta(const ExtendedMetricSpace& space, PointId p, const std::vector<PointId>& sequence) {
  if (sequence.size() < 2) throw Error(ErrorKind::Contract, "sequence needs at least two points");
  const KernelMatrix kernel = inversion_kernel(space, p);
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    worst = std::max(worst, kernel(sequence[i].index, sequence[i + 1].index));
  }
  return 4.0 * worst / kernel(sequence.front().index, sequence.back().index);
}

bool satisfies_sufficient_condition(const ExtendedMetricSpace& space, PointId p,
                                    const std::vector<PointId>& sequence, double theta) {
  return approx_le(sufficient_theta(space, p, sequence), theta);
}

std::optional<std::size_t> lemma_index(const ExtendedMetricSpace& space, PointId p, const Chain& chain) {
  const double t = std::cbrt(4.0 * chain.theta);
  const ChainGeometry g = chain_geometry(space.matrix(), p, to_base(p, chain.points));
  for (std::size_t s = 0; s < g.links.size(); ++s) {
    if (g.links[s] > g.endpoints_distance * t &&
        std::max(g.radii[s], g.radii[s + 1]) * t >= g.radii.front()) {
      return s;
    }
  }
  return std::nullopt;
}

TransportResult transport_chain(const ExtendedMetricSpace& space, PointId p, const Chain& chain) {
  if (chain.theta > 1.0 / 32.0) {
    throw Error(ErrorKind::Parameter, "transport needs theta <= 1/32");
  }
  require_inverted_chain(space, p, chain);
  return pivot_transport(space.matrix(), p, to_base(p, chain.points), std::cbrt(4.0 * chain.theta));
}

TransportResult transport_chain_lambda(const QuasiMetricSpace& space, const LambdaWeighting& w,
                                       const Chain& chain) {
  const double limit = std::pow(space.K(), -19.0);
  if (!approx_le(chain.theta, limit, 1e-12, 0.0)) {
    throw Error(ErrorKind::Parameter, "λ-transport needs theta <= 1/K^19");
  }
  const double target = std::cbrt(chain.theta * std::pow(w.k_prime, 4.0));
  if (!(target < 1.0)) {
    throw Error(ErrorKind::Parameter, "target constant (theta K'^4)^(1/3) must be below 1");
  }
  const auto zero = lambda_zero(w);
  if (!zero) throw Error(ErrorKind::Domain, "λ has no zero to serve as pivot");
  const QuasiMetricSpace transformed = lambda_transform(space, w);
  if (auto defect = chain_defect(transformed.matrix(), chain.points, chain.theta)) {
    throw Error(ErrorKind::Contract, "not a theta-chain of the λ-transformed space: " + *defect);
  }
  return pivot_transport(space.matrix(), *zero, chain.points, target);
}

}  // namespace mobius
