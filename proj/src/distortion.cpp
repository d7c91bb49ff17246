#include "mobius/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mobius/error.hpp"
#include "mobius/numeric.hpp"

namespace mobius {

Quadruple make_quadruple(PointId x1, PointId x2, PointId x3, PointId x4) {
  const std::array<PointId, 4> ids{x1, x2, x3, x4};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (ids[i] == ids[j]) throw Error(ErrorKind::Contract, "quadruple points must be pairwise distinct");
    }
  }
  return Quadruple{ids};
}

double cross_ratio(const DistanceMatrix& d, const Quadruple& q) {
  const auto [x1, x2, x3, x4] = q.ids;
  std::array<double, 2> num{d(x1.index, x3.index), d(x2.index, x4.index)};
  std::array<double, 2> den{d(x1.index, x4.index), d(x2.index, x3.index)};
  const auto count_inf = [](const std::array<double, 2>& f) {
    return std::count_if(f.begin(), f.end(), [](double v) { return std::isinf(v); });
  };
  const auto inf_num = count_inf(num);
  const auto inf_den = count_inf(den);
  if (inf_num != inf_den || inf_num > 1) {
    throw Error(ErrorKind::Undefined, "infinite factors of the cross-ratio do not cancel one-for-one");
  }
  double n = 1.0;
  double m = 1.0;
  for (double v : num) {
    if (!std::isinf(v)) n *= v;
  }
  for (double v : den) {
    if (!std::isinf(v)) m *= v;
  }
  if (!(m > 0.0)) throw Error(ErrorKind::Undefined, "cross-ratio denominator vanishes");
  return n / m;
}

namespace {

void check_bijection(std::size_t n_source, std::size_t n_target, const std::vector<PointId>& f) {
  if (n_source != n_target) throw Error(ErrorKind::Contract, "source and target sizes differ");
  if (f.size() != n_source) throw Error(ErrorKind::Contract, "mapping size differs from the space size");
  invert_mapping(f);
}

void check_remote_correspondence(const DistanceMatrix& source, const DistanceMatrix& target,
                                 const std::vector<PointId>& f) {
  const auto src = remote_points(source);
  const auto tgt = remote_points(target);
  if (src.empty() || tgt.empty()) return;
  for (auto w : src) {
    if (!std::binary_search(tgt.begin(), tgt.end(), f[w.index])) {
      throw Error(ErrorKind::Contract, "the mapping must send the remote point to the remote point");
    }
  }
}

// Calls visit(ids) for every ordered k-tuple of distinct indices, or for a
// seeded uniform sample once n exceeds the enumeration limit.
template <std::size_t K, typename Visit>
bool for_each_tuple(std::size_t n, const SamplingPolicy& policy, Visit&& visit) {
  std::array<std::size_t, K> ids{};
  if (n <= policy.full_enumeration_limit) {
    const auto recurse = [&](auto&& self, std::size_t depth) -> void {
      if (depth == K) {
        visit(ids);
        return;
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (std::find(ids.begin(), ids.begin() + depth, v) != ids.begin() + depth) continue;
        ids[depth] = v;
        self(self, depth + 1);
      }
    };
    if (n >= K) recurse(recurse, 0);
    return false;
  }
  std::mt19937_64 rng(policy.seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t s = 0; s < policy.sample_size; ++s) {
    for (std::size_t depth = 0; depth < K; ++depth) {
      do {
        ids[depth] = pick(rng);
      } while (std::find(ids.begin(), ids.begin() + depth, ids[depth]) != ids.begin() + depth);
    }
    visit(ids);
  }
  return true;
}

}  // namespace

DistortionScatter distortion_scatter(const DistanceMatrix& source, const DistanceMatrix& target,
                                     const std::vector<PointId>& f, const SamplingPolicy& policy) {
  check_bijection(source.size(), target.size(), f);
  check_remote_correspondence(source, target, f);
  DistortionScatter out;
  out.mapping = f;
  out.sampled = for_each_tuple<4>(source.size(), policy, [&](const std::array<std::size_t, 4>& ids) {
    const Quadruple q{{PointId{ids[0]}, PointId{ids[1]}, PointId{ids[2]}, PointId{ids[3]}}};
    const Quadruple fq{{f[ids[0]], f[ids[1]], f[ids[2]], f[ids[3]]}};
    try {
      const double t = cross_ratio(source, q);
      const double u = cross_ratio(target, fq);
      out.pairs.emplace_back(t, u);
      out.quadruples.push_back(q);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Undefined) throw;
      ++out.skipped;
    }
  });
  return out;
}

TripleScatter quasisymmetry_scatter(const DistanceMatrix& source, const DistanceMatrix& target,
                                    const std::vector<PointId>& f, const SamplingPolicy& policy) {
  check_bijection(source.size(), target.size(), f);
  TripleScatter out;
  out.sampled = for_each_tuple<3>(source.size(), policy, [&](const std::array<std::size_t, 3>& ids) {
    const double a = source(ids[0], ids[1]);
    const double b = source(ids[0], ids[2]);
    const double c = target(f[ids[0]].index, f[ids[1]].index);
    const double e = target(f[ids[0]].index, f[ids[2]].index);
    if (std::isinf(a) || std::isinf(b) || std::isinf(c) || std::isinf(e) || !(b > 0.0) || !(e > 0.0)) {
      ++out.skipped;
      return;
    }
    out.pairs.emplace_back(a / b, c / e);
    out.triples.push_back({PointId{ids[0]}, PointId{ids[1]}, PointId{ids[2]}});
  });
  return out;
}

MonotoneEnvelope::MonotoneEnvelope(std::vector<std::pair<double, double>> breakpoints)
    : breakpoints_(std::move(breakpoints)) {}

MonotoneEnvelope MonotoneEnvelope::of(const std::vector<std::pair<double, double>>& scatter) {
  if (scatter.empty()) throw Error(ErrorKind::Contract, "envelope of an empty scatter");
  auto sorted = scatter;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<double, double>> points;
  double running = -kInf;
  for (const auto& [t, u] : sorted) {
    running = std::max(running, u);
    if (!points.empty() && points.back().first == t) {
      points.back().second = running;
    } else {
      points.emplace_back(t, running);
    }
  }
  return MonotoneEnvelope(std::move(points));
}

double MonotoneEnvelope::operator()(double t) const noexcept {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t,
                             [](double value, const auto& bp) { return value < bp.first; });
  if (it == breakpoints_.begin()) return 0.0;
  return std::prev(it)->second;
}

bool MonotoneEnvelope::dominates(const std::vector<std::pair<double, double>>& scatter) const noexcept {
  return std::all_of(scatter.begin(), scatter.end(),
                     [this](const auto& point) { return point.second <= (*this)(point.first); });
}

MonotoneEnvelope monotone_envelope(const DistortionScatter& scatter) {
  return MonotoneEnvelope::of(scatter.pairs);
}

MonotoneEnvelope monotone_envelope(const TripleScatter& scatter) {
  return MonotoneEnvelope::of(scatter.pairs);
}

std::vector<PointId> identity_mapping(std::size_t n) {
  std::vector<PointId> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = PointId{i};
  return f;
}

std::vector<PointId> invert_mapping(const std::vector<PointId>& f) {
  std::vector<PointId> inverse(f.size(), PointId{f.size()});
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].index >= f.size() || inverse[f[i].index].index != f.size()) {
      throw Error(ErrorKind::Contract, "mapping is not a bijection");
    }
    inverse[f[i].index] = PointId{i};
  }
  return inverse;
}

}  // namespace mobius
