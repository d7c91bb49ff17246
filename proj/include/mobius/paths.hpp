#pragma once

// All-pairs path computations over a complete weighted graph given as a matrix.
// +inf weights mean "no edge".

#include <cstddef>
#include <vector>

#include "mobius/distance_matrix.hpp"

namespace mobius {

/// Floyd–Warshall: entry (i,j) is the least total weight of a path from i to j.
DistanceMatrix all_pairs_shortest(const DistanceMatrix& weights);

/// Minimax variant: entry (i,j) is the least possible maximum edge weight over
/// all paths from i to j (the direct edge included).
DistanceMatrix all_pairs_bottleneck(const DistanceMatrix& weights);

/// Lexicographically smallest (by vertex index) path among those realizing
/// shortest(from, to). `shortest` must come from all_pairs_shortest(weights).
std::vector<std::size_t> lexicographic_shortest_path(const DistanceMatrix& weights,
                                                     const DistanceMatrix& shortest,
                                                     std::size_t from, std::size_t to);

}  // namespace mobius
