#include "mobius/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "mobius/error.hpp"
#include "mobius/numeric.hpp"
#include "mobius/paths.hpp"

namespace mobius {

namespace {

constexpr const char* kAlphabet = "0123456789abcdefghijklmnopqrstuvwxyz";

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

DistanceMatrix planar_distances(const std::vector<std::array<double, 2>>& pts) {
  DistanceMatrix d(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i != j) d(i, j) = std::hypot(pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]);
    }
  }
  return d;
}

}  // namespace

ExtendedMetricSpace cantor_space(const CantorSpec& spec) {
  if (spec.k < 2 || spec.k > 36) throw Error(ErrorKind::Parameter, "alphabet size must lie in [2, 36]");
  if (spec.depth < 1) throw Error(ErrorKind::Parameter, "depth must be at least 1");
  if (!(spec.a > 0.0 && spec.a < 1.0)) throw Error(ErrorKind::Parameter, "a must lie in (0,1)");
  std::size_t n = 1;
  for (std::size_t i = 0; i < spec.depth; ++i) {
    if (n > spec.point_cap / spec.k) {
      throw Error(ErrorKind::Size, "k^depth exceeds the point cap of " + std::to_string(spec.point_cap));
    }
    n *= spec.k;
  }
  std::vector<std::string> words(n, std::string(spec.depth, '0'));
  for (std::size_t w = 0; w < n; ++w) {
    std::size_t rest = w;
    for (std::size_t pos = spec.depth; pos-- > 0;) {
      words[w][pos] = kAlphabet[rest % spec.k];
      rest /= spec.k;
    }
  }
  DistanceMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      std::size_t L = 0;
      while (words[i][L] == words[j][L]) ++L;
      d(i, j) = std::pow(spec.a, static_cast<double>(L));
    }
  }
  return ExtendedMetricSpace(std::move(words), std::move(d));
}

ExtendedMetricSpace euclidean_space(const std::vector<std::vector<double>>& coords,
                                    std::vector<std::string> labels) {
  const std::size_t n = coords.size();
  if (n < 3) throw Error(ErrorKind::Size, "need at least 3 points");
  if (labels.empty()) labels = numbered("e", n);
  if (labels.size() != n) throw Error(ErrorKind::Shape, "label count differs from point count");
  for (const auto& c : coords) {
    if (c.size() != coords.front().size() || c.empty()) {
      throw Error(ErrorKind::Shape, "coordinates must share one positive dimension");
    }
  }
  DistanceMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double sq = 0.0;
      for (std::size_t k = 0; k < coords[i].size(); ++k) {
        const double diff = coords[i][k] - coords[j][k];
        sq += diff * diff;
      }
      if (sq == 0.0) {
        throw Error(ErrorKind::Degeneracy,
                    "duplicate points " + labels[i] + " and " + labels[j]);
      }
      d(i, j) = d(j, i) = std::sqrt(sq);
    }
  }
  return ExtendedMetricSpace(std::move(labels), std::move(d));
}

RayInstance inversion_ray(std::size_t n, double u_lo, double u_hi) {
  if (n < 3) throw Error(ErrorKind::Parameter, "ray needs n >= 3");
  if (!(u_lo > 0.0) || !(u_lo < u_hi) || !std::isfinite(u_hi)) {
    throw Error(ErrorKind::Parameter, "ray needs 0 < u_lo < u_hi < inf");
  }
  std::vector<std::vector<double>> coords{{0.0}};
  std::vector<std::string> labels{"p"};
  for (std::size_t i = 0; i < n; ++i) {
    const double u = u_lo + (u_hi - u_lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    coords.push_back({1.0 / u});
    labels.push_back("x" + std::to_string(i));
  }
  return RayInstance{euclidean_space(coords, std::move(labels)), PointId{0}};
}

const char* to_string(RandomModel model) noexcept {
  switch (model) {
    case RandomModel::Ultrametric: return "ultrametric";
    case RandomModel::PerturbedGrid: return "perturbed-grid";
    case RandomModel::Euclidean: return "euclidean";
    case RandomModel::Graph: return "graph";
  }
  return "?";
}

ExtendedMetricSpace random_metric_space(std::uint64_t seed, std::size_t n, RandomModel model,
                                        double jitter) {
  if (n < 3) throw Error(ErrorKind::Size, "need at least 3 points");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  switch (model) {
    case RandomModel::Ultrametric: {
      std::vector<std::vector<std::size_t>> clusters;
      for (std::size_t i = 0; i < n; ++i) clusters.push_back({i});
      DistanceMatrix d(n);
      double height = 0.0;
      while (clusters.size() > 1) {
        std::uniform_int_distribution<std::size_t> pick(0, clusters.size() - 1);
        std::size_t i = pick(rng);
        std::size_t j = pick(rng);
        while (j == i) j = pick(rng);
        if (i > j) std::swap(i, j);
        height += 0.1 + 0.9 * unit(rng);
        for (auto a : clusters[i]) {
          for (auto b : clusters[j]) d(a, b) = d(b, a) = height;
        }
        clusters[i].insert(clusters[i].end(), clusters[j].begin(), clusters[j].end());
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(j));
      }
      return ExtendedMetricSpace(numbered("u", n), std::move(d));
    }
    case RandomModel::PerturbedGrid: {
      if (!(jitter >= 0.0 && jitter < 0.5)) throw Error(ErrorKind::Parameter, "jitter must lie in [0, 0.5)");
      const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
      std::vector<std::array<double, 2>> pts;
      for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i % side) + jitter * (2.0 * unit(rng) - 1.0);
        const double y = static_cast<double>(i / side) + jitter * (2.0 * unit(rng) - 1.0);
        pts.push_back({x, y});
      }
      return ExtendedMetricSpace(numbered("g", n), planar_distances(pts));
    }
    case RandomModel::Euclidean: {
      std::vector<std::array<double, 2>> pts;
      for (std::size_t i = 0; i < n; ++i) pts.push_back({unit(rng), unit(rng)});
      return ExtendedMetricSpace(numbered("e", n), planar_distances(pts));
    }
    case RandomModel::Graph: {
      DistanceMatrix w(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) w(i, j) = w(j, i) = 0.1 + 0.9 * unit(rng);
      }
      return ExtendedMetricSpace(numbered("v", n), all_pairs_shortest(w));
    }
  }
  throw Error(ErrorKind::Parameter, "unknown random model");
}

QuasiMetricSpace random_quasi_space(std::uint64_t seed, std::size_t n, double K, std::size_t budget) {
  if (n < 3) throw Error(ErrorKind::Size, "need at least 3 points");
  if (!(K > 1.0)) throw Error(ErrorKind::Parameter, "random quasi-metrics need K > 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double top = std::log2(K);
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    std::vector<std::array<double, 2>> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back({unit(rng), unit(rng)});
    const double alpha = top * (0.5 + 0.4 * unit(rng));
    DistanceMatrix d = planar_distances(pts);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        d(i, j) = d(j, i) = std::pow(d(i, j), alpha) * (1.0 + 0.1 * unit(rng));
      }
    }
    if (validate_quasi_metric(d, K).ok()) return QuasiMetricSpace(numbered("q", n), std::move(d), K);
  }
  std::ostringstream out;
  out << "no valid " << K << "-quasi-metric within " << budget << " draws (seed " << seed << ")";
  throw Error(ErrorKind::Generation, out.str());
}

LambdaWeighting distance_weighting(const QuasiMetricSpace& space, PointId p, double L,
                                   const std::vector<double>& g, double k_prime) {
  if (g.size() != space.size()) throw Error(ErrorKind::Shape, "one factor per point is required");
  LambdaWeighting w;
  w.L = L;
  w.k_prime = k_prime;
  for (std::size_t x = 0; x < space.size(); ++x) {
    w.lambda.push_back(x == p.index ? 0.0 : space.distance(p, PointId{x}) * g[x] / L);
  }
  return w;
}

LambdaInstance random_lambda_instance(std::uint64_t seed, std::size_t n, double K, double c,
                                      bool with_remote) {
  if (!(c >= 1.0)) throw Error(ErrorKind::Parameter, "c must be at least 1");
  QuasiMetricSpace base = K == 1.0 ? to_quasi(random_metric_space(seed, n, RandomModel::Ultrametric), 1.0)
                                   : random_quasi_space(seed, n, K);
  if (with_remote) {
    auto labels = base.labels();
    labels.push_back("∞");
    DistanceMatrix d(n + 1, kInf);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d(i, j) = base.matrix()(i, j);
    }
    d(n, n) = 0.0;
    base = QuasiMetricSpace(std::move(labels), std::move(d), K, {PointId{n}});
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> g;
  for (std::size_t x = 0; x < base.size(); ++x) g.push_back(1.0 + (c - 1.0) * unit(rng));
  const double L = 0.5 + 1.5 * unit(rng);
  const PointId p{0};
  LambdaWeighting w = distance_weighting(base, p, L, g, c * K);
  if (auto report = validate_weighting(base, w); !report.ok()) {
    throw Error(ErrorKind::Generation, "weighting failed validation: " + report.summary());
  }
  return LambdaInstance{std::move(base), std::move(w), p};
}

LambdaChainInstance lambda_chain_instance(double k_prime, double theta, double K, double far,
                                          std::size_t max_points) {
  if (!(k_prime >= K) || !(theta > 0.0 && theta < 1.0) || !(far > 1.0)) {
    throw Error(ErrorKind::Parameter, "lambda chain instance needs K' >= K, theta in (0,1) and far > 1");
  }
  // g(x) stands for L λ(x) with L = 1; the weighting inequalities against p = 0
  // read x <= K' g(x) and g(x) <= K' x.
  const double x0 = 1.0;
  const double gm = far / k_prime;
  const double l = k_prime * k_prime * (1.0 / x0 - 1.0 / far);
  std::vector<double> xs{x0};
  std::vector<double> gs{x0 / k_prime};

  const auto bounds = [&](double y) {
    double hi = std::min(k_prime * y, std::max(k_prime * (far - y), k_prime * gm));
    double lo = y / k_prime;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double gap = std::abs(xs[i] - y);
      hi = std::min(hi, k_prime * std::max(gap, gs[i]));
      if (gs[i] > k_prime * gap) lo = std::max(lo, gs[i] / k_prime);
    }
    return std::pair{lo, hi};
  };
  const auto link = [](double x, double gx, double y, double gy) { return std::abs(x - y) / (gx * gy); };

  while (link(xs.back(), gs.back(), far, gm) > theta * l * (1.0 - 1e-9)) {
    double a = xs.back();
    double b = far;
    for (int it = 0; it < 80; ++it) {
      const double y = 0.5 * (a + b);
      const auto [lo, hi] = bounds(y);
      const double gy = 0.999 * hi;
      if (lo <= gy && link(xs.back(), gs.back(), y, gy) <= theta * l * (1.0 - 1e-6)) {
        a = y;
      } else {
        b = y;
      }
    }
    if (a == xs.back() || xs.size() >= max_points) {
      throw Error(ErrorKind::Generation, "lambda chain construction stalled at x = " + std::to_string(a));
    }
    gs.push_back(0.999 * bounds(a).second);
    xs.push_back(a);
  }
  xs.push_back(far);
  gs.push_back(gm);

  const std::size_t n = xs.size() + 1;
  DistanceMatrix d(n);
  std::vector<double> coord{0.0};
  coord.insert(coord.end(), xs.begin(), xs.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d(i, j) = std::abs(coord[i] - coord[j]);
  }
  std::vector<std::string> labels{"p"};
  for (std::size_t i = 0; i < xs.size(); ++i) labels.push_back("x" + std::to_string(i));
  QuasiMetricSpace space(std::move(labels), std::move(d), K);

  LambdaWeighting w;
  w.L = 1.0;
  w.k_prime = k_prime;
  w.lambda.push_back(0.0);
  w.lambda.insert(w.lambda.end(), gs.begin(), gs.end());
  if (auto report = validate_weighting(space, w); !report.ok()) {
    throw Error(ErrorKind::Generation, "engineered weighting failed validation: " + report.summary());
  }
  const QuasiMetricSpace transformed = lambda_transform(space, w);
  std::vector<PointId> points;
  for (std::size_t i = 1; i < n; ++i) points.push_back(PointId{i});
  Chain chain = make_chain(transformed.matrix(), std::move(points), theta);
  return LambdaChainInstance{std::move(space), std::move(w), PointId{0}, std::move(chain)};
}

}  // namespace mobius
