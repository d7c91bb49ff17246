#include "mobius/covering.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>

#include "mobius/error.hpp"

namespace mobius {

const char* to_string(CoverMode mode) noexcept {
  return mode == CoverMode::Exact ? "exact" : "greedy";
}

Ball ball(const DistanceMatrix& d, PointId center, double r) {
  if (!std::isfinite(r) || r < 0.0) {
    throw Error(ErrorKind::Parameter, "ball radius must be finite and non-negative");
  }
  if (center.index >= d.size()) throw Error(ErrorKind::Parameter, "ball center out of range");
  Ball b{center, r, {}};
  for (std::size_t x = 0; x < d.size(); ++x) {
    if (d(center.index, x) <= r) b.members.push_back(PointId{x});
  }
  return b;
}

namespace {

using Mask = std::uint64_t;

// Candidate sets restricted to the universe, as lists of universe positions.
struct CoverInstance {
  std::vector<std::size_t> universe;             // point indices
  std::vector<std::size_t> centers;              // candidate centre per set
  std::vector<std::vector<std::size_t>> sets;    // universe positions covered
};

CoverInstance build_instance(const DistanceMatrix& d, const Ball& target, double half) {
  CoverInstance inst;
  for (auto m : target.members) inst.universe.push_back(m.index);
  for (std::size_t c = 0; c < d.size(); ++c) {
    std::vector<std::size_t> covered;
    for (std::size_t u = 0; u < inst.universe.size(); ++u) {
      if (d(c, inst.universe[u]) <= half) covered.push_back(u);
    }
    if (covered.empty()) continue;
    inst.centers.push_back(c);
    inst.sets.push_back(std::move(covered));
  }
  return inst;
}

// Largest marginal gain first; ties go to the lowest centre index.
std::vector<std::size_t> greedy_cover(const CoverInstance& inst) {
  std::vector<bool> covered(inst.universe.size(), false);
  std::size_t remaining = inst.universe.size();
  std::vector<std::size_t> chosen;
  while (remaining > 0) {
    std::size_t best = inst.sets.size();
    std::size_t best_gain = 0;
    for (std::size_t s = 0; s < inst.sets.size(); ++s) {
      std::size_t gain = 0;
      for (auto u : inst.sets[s]) gain += covered[u] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = s;
      }
    }
    // every universe point covers itself, so best is always found
    chosen.push_back(best);
    for (auto u : inst.sets[best]) {
      if (!covered[u]) {
        covered[u] = true;
        --remaining;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

// Include-first depth-first search over sets in centre order. The first cover
// found with at most `slots` sets is the lexicographically smallest one.
class ExactCover {
 public:
  explicit ExactCover(const CoverInstance& inst) {
    std::map<Mask, bool> seen;
    for (std::size_t s = 0; s < inst.sets.size(); ++s) {
      Mask m = 0;
      for (auto u : inst.sets[s]) m |= Mask{1} << u;
      if (!seen.emplace(m, true).second) continue;  // identical set with a smaller centre exists
      masks_.push_back(m);
      set_ids_.push_back(s);
    }
    const std::size_t k = masks_.size();
    suffix_union_.assign(k + 1, 0);
    suffix_max_.assign(k + 1, 0);
    for (std::size_t i = k; i-- > 0;) {
      suffix_union_[i] = suffix_union_[i + 1] | masks_[i];
      suffix_max_[i] = std::max<std::size_t>(suffix_max_[i + 1], std::popcount(masks_[i]));
    }
    universe_ = inst.universe.size() == 64 ? ~Mask{0} : (Mask{1} << inst.universe.size()) - 1;
  }

  std::vector<std::size_t> solve(std::size_t upper) {
    const std::size_t max_size = suffix_max_.empty() ? 1 : std::max<std::size_t>(suffix_max_[0], 1);
    const std::size_t lower = (std::popcount(universe_) + max_size - 1) / max_size;
    for (std::size_t k = std::max<std::size_t>(lower, 1); k <= upper; ++k) {
      chosen_.clear();
      if (search(0, universe_, k)) {
        std::vector<std::size_t> out;
        for (auto i : chosen_) out.push_back(set_ids_[i]);
        return out;
      }
    }
    return {};
  }

 private:
  bool search(std::size_t i, Mask uncovered, std::size_t slots) {
    if (uncovered == 0) return true;
    if (slots == 0 || i == masks_.size()) return false;
    if ((uncovered & ~suffix_union_[i]) != 0) return false;
    if (static_cast<std::size_t>(std::popcount(uncovered)) > slots * suffix_max_[i]) return false;
    if (masks_[i] & uncovered) {
      chosen_.push_back(i);
      if (search(i + 1, uncovered & ~masks_[i], slots - 1)) return true;
      chosen_.pop_back();
    }
    return search(i + 1, uncovered, slots);
  }

  std::vector<Mask> masks_;
  std::vector<std::size_t> set_ids_;
  std::vector<Mask> suffix_union_;
  std::vector<std::size_t> suffix_max_;
  std::vector<std::size_t> chosen_;
  Mask universe_ = 0;
};

void check_exact_points(const DistanceMatrix& d, const CoverLimits& limits) {
  if (d.size() > limits.max_points) {
    throw Error(ErrorKind::ExactLimit, "exact cover refused: " + std::to_string(d.size()) +
                                           " points exceed the cap of " +
                                           std::to_string(limits.max_points));
  }
}

}  // namespace

CoverResult min_half_cover(const DistanceMatrix& d, PointId center, double r, CoverMode mode,
                           CoverLimits limits) {
  const Ball target = ball(d, center, r);
  const double half = r / 2.0;
  if (mode == CoverMode::Exact) {
    check_exact_points(d, limits);
    const std::size_t cap = std::min<std::size_t>(limits.max_universe, 64);
    if (target.members.size() > cap) {
      throw Error(ErrorKind::ExactLimit, "exact cover refused: ball has " +
                                             std::to_string(target.members.size()) +
                                             " members, cap is " + std::to_string(cap));
    }
  }
  const CoverInstance inst = build_instance(d, target, half);
  std::vector<std::size_t> chosen = greedy_cover(inst);
  if (mode == CoverMode::Exact) chosen = ExactCover(inst).solve(chosen.size());

  CoverResult result;
  result.count = chosen.size();
  for (auto s : chosen) result.balls.push_back(ball(d, PointId{inst.centers[s]}, half));
  return result;
}

std::vector<double> candidate_radii(const DistanceMatrix& d) {
  std::vector<double> radii;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const double v = d(i, j);
      if (std::isfinite(v) && v > 0.0) {
        radii.push_back(v);
        radii.push_back(2.0 * v);
      }
    }
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  return radii;
}

DoublingReport doubling_constant(const DistanceMatrix& d, CoverMode mode, CoverLimits limits) {
  if (mode == CoverMode::Exact) check_exact_points(d, limits);
  const auto radii = candidate_radii(d);
  DoublingReport report;
  report.method = mode;
  for (std::size_t c = 0; c < d.size(); ++c) {
    for (double r : radii) {
      const auto cover = min_half_cover(d, PointId{c}, r, mode, limits);
      report.table.push_back({PointId{c}, r, cover.count});
      if (cover.count > report.constant) {
        report.constant = cover.count;
        report.witness_center = PointId{c};
        report.witness_radius = r;
      }
    }
  }
  return report;
}

namespace {

void check_cap(std::size_t n, std::size_t exact_cap) {
  if (n > exact_cap) {
    throw Error(ErrorKind::ExactLimit,
                "certificate refused: " + std::to_string(n) + " points exceed the exact cap of " +
                    std::to_string(exact_cap) + " (greedy covers cannot certify this bound)");
  }
}

DoublingCertificate certify(std::size_t d1, std::size_t d2, double exponent, std::string bound) {
  DoublingCertificate cert;
  cert.bound = std::move(bound);
  cert.source_constant = d1;
  cert.transformed_constant = d2;
  cert.exponent = exponent;
  cert.bound_value = std::pow(static_cast<double>(d1), exponent) + 1.0;
  cert.log_ratio = d1 > 1 ? std::log(static_cast<double>(d2)) / std::log(static_cast<double>(d1)) : 0.0;
  cert.passed = static_cast<double>(d2) <= cert.bound_value;
  return cert;
}

}  // namespace

DoublingCertificate check_inversion_doubling(const ExtendedMetricSpace& space, PointId p,
                                             std::size_t exact_cap) {
  check_cap(space.size(), exact_cap);
  const auto inverted = chain_metric(space, p);
  const auto d1 = doubling_constant(space, CoverMode::Exact).constant;
  const auto d2 = doubling_constant(inverted, CoverMode::Exact).constant;
  return certify(d1, d2, 10.0, "D^10 + 1");
}

double lambda_doubling_exponent(double K, double k_prime) {
  return std::ceil(std::log2(8.0 * std::pow(k_prime, 10.0) * K));
}

DoublingCertificate check_lambda_doubling(const QuasiMetricSpace& space, const LambdaWeighting& w,
                                          std::size_t exact_cap) {
  check_cap(space.size(), exact_cap);
  const auto transformed = lambda_transform(space, w);
  const auto d1 = doubling_constant(space, CoverMode::Exact).constant;
  const auto d2 = doubling_constant(transformed, CoverMode::Exact).constant;
  const double exponent = lambda_doubling_exponent(space.K(), w.k_prime);
  std::ostringstream bound;
  bound << "D^" << exponent << " + 1";
  return certify(d1, d2, exponent, bound.str());
}

}  // namespace mobius
