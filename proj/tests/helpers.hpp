#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "mobius/generators.hpp"
#include "mobius/space.hpp"

namespace testing {

inline std::string coordinate_label(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Points on the real line, labelled by their coordinates.
inline mobius::ExtendedMetricSpace line(const std::vector<double>& xs) {
  std::vector<std::vector<double>> coords;
  std::vector<std::string> labels;
  for (double x : xs) {
    coords.push_back({x});
    labels.push_back(coordinate_label(x));
  }
  return mobius::euclidean_space(coords, labels);
}

inline mobius::ExtendedMetricSpace uniform(std::size_t n) {
  mobius::DistanceMatrix d(n, 1.0);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    d(i, i) = 0.0;
    labels.push_back("u" + std::to_string(i));
  }
  return mobius::ExtendedMetricSpace(labels, d);
}

// Graph metric of the 4-cycle a-b-c-d-a: not Ptolemaic.
inline mobius::ExtendedMetricSpace four_cycle() {
  return mobius::ExtendedMetricSpace(
      {"a", "b", "c", "d"},
      mobius::DistanceMatrix::from_rows({{0, 1, 2, 1}, {1, 0, 1, 2}, {2, 1, 0, 1}, {1, 2, 1, 0}}));
}

inline std::vector<mobius::ExtendedMetricSpace> small_zoo(std::uint64_t seed, std::size_t n) {
  using mobius::RandomModel;
  std::vector<mobius::ExtendedMetricSpace> zoo;
  for (auto model : {RandomModel::Euclidean, RandomModel::Ultrametric, RandomModel::PerturbedGrid,
                     RandomModel::Graph}) {
    zoo.push_back(mobius::random_metric_space(seed, n, model));
  }
  return zoo;
}

}  // namespace testing
