#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "mobius/distortion.hpp"
#include "mobius/error.hpp"
#include "mobius/generators.hpp"
#include "mobius/numeric.hpp"
#include "mobius/transforms.hpp"

using namespace mobius;
using doctest::Approx;

namespace {

Quadruple quad(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  return make_quadruple(PointId{a}, PointId{b}, PointId{c}, PointId{d});
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Contract;
}

DistanceMatrix scaled(const DistanceMatrix& d, double t) {
  DistanceMatrix out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) out(i, j) = t * d(i, j);
  }
  return out;
}

}  // namespace

TEST_SUITE("distortion") {

TEST_CASE("cross-ratio values") {
  const auto s = testing::line({0, 1, 2, 3});
  CHECK(cross_ratio(s, quad(0, 1, 2, 3)) == Approx(4.0 / 3.0));
  CHECK(cross_ratio(testing::uniform(4), quad(3, 1, 0, 2)) == 1.0);
  CHECK(kind_of([] { make_quadruple(PointId{0}, PointId{1}, PointId{1}, PointId{2}); }) == ErrorKind::Contract);
}

TEST_CASE("cross-ratio symmetries") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    for (const auto& s : testing::small_zoo(seed, 6)) {
      const double c = cross_ratio(s, quad(0, 1, 2, 3));
      CHECK(c * cross_ratio(s, quad(0, 1, 3, 2)) == Approx(1.0));
      CHECK(cross_ratio(s, quad(1, 0, 3, 2)) == Approx(c));
      CHECK(cross_ratio(s, quad(2, 3, 0, 1)) == Approx(c));
    }
  }
}

TEST_CASE("the remote point cancels") {
  const auto c = complete_with_remote(testing::line({0, 1, 2}));
  const std::size_t w = c.remote()->index;
  CHECK(cross_ratio(c, quad(0, 1, 2, w)) == Approx(2.0));
  CHECK(cross_ratio(c, quad(w, 0, 1, 2)) == Approx(2.0));
}

TEST_CASE("undefined cross-ratios") {
  const double inf = kInf;
  const auto two_remote = DistanceMatrix::from_rows(
      {{0, 1, inf, inf}, {1, 0, inf, inf}, {inf, inf, 0, inf}, {inf, inf, inf, 0}});
  CHECK(kind_of([&] { cross_ratio(two_remote, quad(0, 1, 2, 3)); }) == ErrorKind::Undefined);
  const auto pseudo = DistanceMatrix::from_rows({{0, 1, 1, 1}, {1, 0, 0, 1}, {1, 0, 0, 1}, {1, 1, 1, 0}});
  CHECK(kind_of([&] { cross_ratio(pseudo, quad(0, 1, 2, 3)); }) == ErrorKind::Undefined);
}

TEST_CASE("monotone envelope") {
  const auto e = MonotoneEnvelope::of({{1, 1}, {3, 2}, {2, 4}});
  using P = std::pair<double, double>;
  CHECK(e.breakpoints() == std::vector<P>{{1, 1}, {2, 4}, {3, 4}});
  CHECK(e(0.5) == 0.0);
  CHECK(e(1.0) == 1.0);
  CHECK(e(2.5) == 4.0);
  CHECK(e(100.0) == 4.0);
  CHECK(e.dominates({{1, 1}, {2.5, 3.9}}));
  CHECK_FALSE(e.dominates({{1.5, 1.1}}));
  CHECK(kind_of([] { MonotoneEnvelope::of({}); }) == ErrorKind::Contract);
}

TEST_CASE("envelope dominates its scatter and is nondecreasing") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto a = random_metric_space(seed, 7, RandomModel::Euclidean);
    const auto b = random_metric_space(seed + 100, 7, RandomModel::Graph);
    const auto scatter = distortion_scatter(a.matrix(), b.matrix(), identity_mapping(7));
    const auto e = monotone_envelope(scatter);
    CHECK(e.dominates(scatter.pairs));
    for (std::size_t i = 1; i < e.breakpoints().size(); ++i) {
      CHECK(e.breakpoints()[i - 1].first < e.breakpoints()[i].first);
      CHECK(e.breakpoints()[i - 1].second <= e.breakpoints()[i].second);
    }
  }
}

TEST_CASE("identity and similarities have diagonal scatter") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    for (const auto& s : testing::small_zoo(seed, 6)) {
      const auto id = distortion_scatter(s.matrix(), s.matrix(), identity_mapping(6));
      CHECK(id.pairs.size() == 6 * 5 * 4 * 3);
      CHECK_FALSE(id.sampled);
      for (const auto& [t, u] : id.pairs) CHECK(t == u);
      const auto sim = distortion_scatter(s.matrix(), scaled(s.matrix(), 3.0), identity_mapping(6));
      for (const auto& [t, u] : sim.pairs) CHECK(u == Approx(t));
      const auto tri = quasisymmetry_scatter(s.matrix(), scaled(s.matrix(), 3.0), identity_mapping(6));
      CHECK(tri.pairs.size() == 6 * 5 * 4);
      for (const auto& [t, u] : tri.pairs) CHECK(u == Approx(t));
    }
  }
}

TEST_CASE("inversion kernel preserves cross-ratios; the chain metric distorts them boundedly") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    for (const auto& s : testing::small_zoo(seed, 8)) {
      const PointId p{seed % 8};
      const auto base = remove_point(s, p);
      const auto kernel = inversion_kernel(s, p);
      const auto dp = chain_metric(s, p);
      const auto k = distortion_scatter(base.matrix(), kernel.matrix(), identity_mapping(7));
      for (const auto& [t, u] : k.pairs) CHECK(u == Approx(t));
      const auto c = distortion_scatter(base.matrix(), dp.matrix(), identity_mapping(7));
      for (const auto& [t, u] : c.pairs) {
        CHECK(approx_le(u, 16.0 * t));
        CHECK(approx_le(t, 16.0 * u));
      }
    }
  }
}

TEST_CASE("permuted targets") {
  const auto s = testing::line({0, 1, 3, 7, 15});
  std::vector<PointId> f{PointId{4}, PointId{2}, PointId{0}, PointId{1}, PointId{3}};
  DistanceMatrix t(5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) t(f[i].index, f[j].index) = s.matrix()(i, j);
  }
  const auto scatter = distortion_scatter(s.matrix(), t, f);
  for (const auto& [a, b] : scatter.pairs) CHECK(a == b);
  CHECK(invert_mapping(invert_mapping(f)) == f);
}

TEST_CASE("mapping contracts") {
  const auto s = testing::line({0, 1, 2, 3});
  std::vector<PointId> bad{PointId{0}, PointId{0}, PointId{2}, PointId{3}};
  CHECK(kind_of([&] { distortion_scatter(s.matrix(), s.matrix(), bad); }) == ErrorKind::Contract);
  CHECK(kind_of([&] { invert_mapping(bad); }) == ErrorKind::Contract);
  const auto five = testing::line({0, 1, 2, 3, 4});
  CHECK(kind_of([&] { distortion_scatter(s.matrix(), five.matrix(), identity_mapping(4)); }) ==
        ErrorKind::Contract);
  const auto c = complete_with_remote(s);
  std::vector<PointId> swap{PointId{4}, PointId{1}, PointId{2}, PointId{3}, PointId{0}};
  CHECK(kind_of([&] { distortion_scatter(c.matrix(), c.matrix(), swap); }) == ErrorKind::Contract);
}

TEST_CASE("sampling above the enumeration limit is seeded") {
  const auto a = random_metric_space(3, 16, RandomModel::Euclidean);
  const auto b = random_metric_space(4, 16, RandomModel::PerturbedGrid);
  SamplingPolicy policy{12, 500, 9};
  const auto x = distortion_scatter(a.matrix(), b.matrix(), identity_mapping(16), policy);
  const auto y = distortion_scatter(a.matrix(), b.matrix(), identity_mapping(16), policy);
  CHECK(x.sampled);
  CHECK(x.pairs.size() + x.skipped == 500);
  CHECK(x.pairs == y.pairs);
  policy.seed = 10;
  CHECK(distortion_scatter(a.matrix(), b.matrix(), identity_mapping(16), policy).pairs != x.pairs);
}

TEST_CASE("remote points in scatters") {
  const auto c = complete_with_remote(testing::line({0, 1, 3, 4}));
  const auto scatter = distortion_scatter(c.matrix(), c.matrix(), identity_mapping(5));
  CHECK(scatter.skipped == 0);
  CHECK(scatter.pairs.size() == 5 * 4 * 3 * 2);
  const auto tri = quasisymmetry_scatter(c.matrix(), c.matrix(), identity_mapping(5));
  CHECK(tri.skipped > 0);
  CHECK(tri.pairs.size() + tri.skipped == 5 * 4 * 3);
}

}
