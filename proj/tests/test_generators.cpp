#include <cmath>

#include "doctest.h"
#include "mobius/error.hpp"
#include "mobius/generators.hpp"
#include "mobius/transforms.hpp"

using namespace mobius;
using doctest::Approx;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Contract;
}

}  // namespace

TEST_SUITE("generators") {

TEST_CASE("cantor words and distances") {
  const auto s = cantor_space({2, 2, 0.5, 1024});
  CHECK(s.labels() == std::vector<std::string>{"00", "01", "10", "11"});
  CHECK(s.distance(PointId{0}, PointId{1}) == 0.5);
  CHECK(s.distance(PointId{0}, PointId{2}) == 1.0);
  CHECK(s.distance(PointId{1}, PointId{3}) == 1.0);
  CHECK(validate_quasi_metric(s.matrix(), 1.0).ok());
  const auto t = cantor_space({12, 1, 0.3, 1024});
  CHECK(t.labels().back() == "b");
}

TEST_CASE("cantor parameter and size errors") {
  CHECK(kind_of([] { cantor_space({1, 3, 0.5, 1024}); }) == ErrorKind::Parameter);
  CHECK(kind_of([] { cantor_space({2, 0, 0.5, 1024}); }) == ErrorKind::Parameter);
  CHECK(kind_of([] { cantor_space({2, 3, 1.0, 1024}); }) == ErrorKind::Parameter);
  CHECK(kind_of([] { cantor_space({2, 11, 0.5, 1024}); }) == ErrorKind::Size);
  CHECK(cantor_space({2, 10, 0.5, 1024}).size() == 1024);
}

TEST_CASE("euclidean spaces") {
  const auto s = euclidean_space({{0, 0}, {3, 4}, {0, 1}});
  CHECK(s.labels() == std::vector<std::string>{"e0", "e1", "e2"});
  CHECK(s.distance(PointId{0}, PointId{1}) == 5.0);
  CHECK(s.distance(PointId{1}, PointId{2}) == Approx(std::sqrt(18.0)));
  CHECK(kind_of([] { euclidean_space({{0, 0}, {1, 1}, {0, 0}}); }) == ErrorKind::Degeneracy);
  CHECK(kind_of([] { euclidean_space({{0, 0}, {1}, {2, 2}}); }) == ErrorKind::Shape);
  CHECK(kind_of([] { euclidean_space({{0}, {1}}); }) == ErrorKind::Size);
  CHECK(kind_of([] { euclidean_space({{0}, {1}, {2}}, {"a", "b"}); }) == ErrorKind::Shape);
}

TEST_CASE("inversion rays") {
  const auto r = inversion_ray(3, 0.5, 1.0);
  CHECK(r.p == PointId{0});
  CHECK(r.space.labels() == std::vector<std::string>{"p", "x0", "x1", "x2"});
  CHECK(r.space.distance(PointId{0}, PointId{1}) == 2.0);
  CHECK(r.space.distance(PointId{0}, PointId{3}) == 1.0);
  const auto dp = chain_metric(r.space, r.p);
  CHECK(dp.distance(PointId{0}, PointId{1}) == Approx(0.25));
  CHECK(kind_of([] { inversion_ray(2, 0.5, 1.0); }) == ErrorKind::Parameter);
  CHECK(kind_of([] { inversion_ray(5, 0.0, 1.0); }) == ErrorKind::Parameter);
  CHECK(kind_of([] { inversion_ray(5, 1.0, 0.5); }) == ErrorKind::Parameter);
}

TEST_CASE("random models are seeded and valid") {
  for (auto model : {RandomModel::Ultrametric, RandomModel::PerturbedGrid, RandomModel::Euclidean,
                     RandomModel::Graph}) {
    CAPTURE(to_string(model));
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto a = random_metric_space(seed, 11, model);
      CHECK(a == random_metric_space(seed, 11, model));
      CHECK(validate_metric(a.matrix()).ok());
      CHECK(a.size() == 11);
    }
    CHECK_FALSE(random_metric_space(1, 11, model) == random_metric_space(2, 11, model));
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    CHECK(validate_quasi_metric(random_metric_space(seed, 9, RandomModel::Ultrametric).matrix(), 1.0).ok());
  }
  CHECK(kind_of([] { random_metric_space(1, 2, RandomModel::Euclidean); }) == ErrorKind::Size);
}

TEST_CASE("perturbed grid without jitter is the grid") {
  const auto g = random_metric_space(5, 9, RandomModel::PerturbedGrid, 0.0);
  CHECK(g.distance(PointId{0}, PointId{1}) == 1.0);
  CHECK(g.distance(PointId{0}, PointId{8}) == Approx(std::sqrt(8.0)));
  CHECK(kind_of([] { random_metric_space(5, 9, RandomModel::PerturbedGrid, 0.5); }) == ErrorKind::Parameter);
}

TEST_CASE("random quasi-metrics") {
  for (double K : {1.5, 2.0, 4.0}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto q = random_quasi_space(seed, 9, K);
      CHECK(q.K() == K);
      CHECK(validate_quasi_metric(q.matrix(), K).ok());
      CHECK(q == random_quasi_space(seed, 9, K));
    }
  }
  CHECK(kind_of([] { random_quasi_space(1, 9, 1.0); }) == ErrorKind::Parameter);
  CHECK(kind_of([] { random_quasi_space(1, 12, 1.0001, 2); }) == ErrorKind::Generation);
}

TEST_CASE("random λ instances") {
  for (double K : {1.0, 1.5, 2.0}) {
    for (double c : {1.0, 2.0}) {
      for (bool remote : {false, true}) {
        const auto inst = random_lambda_instance(7, 8, K, c, remote);
        CHECK(inst.weighting.k_prime == Approx(c * K));
        CHECK(validate_weighting(inst.space, inst.weighting).ok());
        CHECK(inst.space.size() == (remote ? 9 : 8));
        if (remote) CHECK(inst.space.label(inst.space.remote_set().front()) == "∞");
      }
    }
  }
  CHECK(kind_of([] { random_lambda_instance(1, 8, 2.0, 0.5, false); }) == ErrorKind::Parameter);
}

TEST_CASE("engineered λ chain instance") {
  const double theta = std::pow(2.0, -19.0);
  const auto lc = lambda_chain_instance(16.0, theta, 2.0);
  CHECK(lc.p == PointId{0});
  CHECK(lc.weighting.lambda.front() == 0.0);
  CHECK(lc.chain.theta == theta);
  CHECK(lc.chain.points.front() == PointId{1});
  CHECK(lc.chain.points.back() == PointId{lc.space.size() - 1});
  CHECK(lc.space.size() < 4000);
  CHECK(kind_of([] { lambda_chain_instance(1.0, 0.1, 2.0); }) == ErrorKind::Parameter);
  CHECK(kind_of([&] { lambda_chain_instance(16.0, theta, 2.0, 1e4, 10); }) == ErrorKind::Generation);
}

}
