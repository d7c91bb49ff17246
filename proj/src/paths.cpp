#include "mobius/paths.hpp"

#include <algorithm>
#include <cmath>

#include "mobius/numeric.hpp"

namespace mobius {

DistanceMatrix all_pairs_shortest(const DistanceMatrix& weights) {
  DistanceMatrix d = weights;
  const std::size_t n = d.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const double dik = d(i, k);
      if (std::isinf(dik)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const double via = dik + d(k, j);
        if (via < d(i, j)) d(i, j) = via;
      }
    }
  }
  return d;
}

DistanceMatrix all_pairs_bottleneck(const DistanceMatrix& weights) {
  DistanceMatrix b = weights;
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const double bik = b(i, k);
      if (std::isinf(bik)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const double via = std::max(bik, b(k, j));
        if (via < b(i, j)) b(i, j) = via;
      }
    }
  }
  return b;
}

std::vector<std::size_t> lexicographic_shortest_path(const DistanceMatrix& weights,
                                                     const DistanceMatrix& shortest,
                                                     std::size_t from, std::size_t to) {
  std::vector<std::size_t> path{from};
  if (from == to) return path;
  std::vector<bool> used(weights.size(), false);
  used[from] = true;
  std::size_t at = from;
  while (at != to) {
    std::size_t next = to;
    for (std::size_t v = 0; v < weights.size(); ++v) {
      if (used[v] || v == at) continue;
      // v lies on some shortest at→to path
      const double through = weights(at, v) + (v == to ? 0.0 : shortest(v, to));
      if (approx_eq(through, shortest(at, to), 1e-12, 1e-15)) {
        next = v;
        break;
      }
    }
    path.push_back(next);
    used[next] = true;
    at = next;
  }
  return path;
}

}  // namespace mobius
