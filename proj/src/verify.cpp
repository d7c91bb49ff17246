#include "mobius/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "mobius/chains.hpp"
#include "mobius/covering.hpp"
#include "mobius/document.hpp"
#include "mobius/distortion.hpp"
#include "mobius/error.hpp"
#include "mobius/generators.hpp"
#include "mobius/numeric.hpp"
#include "mobius/transforms.hpp"

namespace mobius {

using json = nlohmann::ordered_json;

json CriterionResult::to_json() const {
  json j;
  j["id"] = id;
  j["name"] = name;
  j["passed"] = passed;
  j["instances"] = instances;
  j["details"] = details;
  j["counterexample"] = counterexample;
  return j;
}

namespace {

struct Instance {
  std::string name;
  ExtendedMetricSpace space;
  PointId p;
};

PointId random_basepoint(const ExtendedMetricSpace& space, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, space.size() - 1);
  PointId p{pick(rng)};
  while (space.is_remote(p)) p = PointId{pick(rng)};
  return p;
}

std::size_t uniform_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Euclidean, ultrametric, perturbed-grid, ray and graph instances in rotation;
// every seventh non-ray instance also gets a remote point.
Instance mixed_instance(std::mt19937_64& rng, std::size_t i, std::size_t max_n) {
  const std::uint64_t sub = rng();
  const std::size_t n = uniform_size(rng, 4, max_n);
  std::string name;
  std::optional<ExtendedMetricSpace> space;
  switch (i % 5) {
    case 0: space = random_metric_space(sub, n, RandomModel::Euclidean); name = "euclidean"; break;
    case 1: space = random_metric_space(sub, n, RandomModel::Ultrametric); name = "ultrametric"; break;
    case 2: space = random_metric_space(sub, n, RandomModel::PerturbedGrid); name = "perturbed-grid"; break;
    case 3: space = random_metric_space(sub, n, RandomModel::Graph); name = "graph"; break;
    default: {
      const double lo = uniform_real(rng, 0.1, 1.0);
      const double hi = lo + uniform_real(rng, 0.1, 2.0);
      auto ray = inversion_ray(n - 1, lo, hi);
      return Instance{"ray#" + std::to_string(i), std::move(ray.space), ray.p};
    }
  }
  if (i % 7 == 0 && n < max_n) {
    space = complete_with_remote(*space);
    name += "+remote";
  }
  const PointId p = random_basepoint(*space, rng);
  return Instance{name + "#" + std::to_string(i), std::move(*space), p};
}

json witness(int criterion, const Instance& inst, const std::string& detail) {
  json j;
  j["criterion"] = criterion;
  j["instance"] = inst.name;
  j["basepoint"] = inst.space.label(inst.p);
  j["detail"] = detail;
  j["document"] = format_document(make_document(inst.name, inst.space, inst.p));
  return j;
}

void fail(CriterionResult& result, json counterexample) {
  if (result.passed) result.counterexample = std::move(counterexample);
  result.passed = false;
}

std::string pair_detail(const std::string& what, const std::string& x, const std::string& y, double lhs,
                        double rhs) {
  std::ostringstream out;
  out.precision(17);
  out << what << " at (" << x << ", " << y << "): " << lhs << " vs " << rhs;
  return out.str();
}

}  // namespace

CriterionResult verify_sandwich(std::uint64_t seed, std::size_t count) {
  CriterionResult result{1, "sandwich relations", true, 0, {}, nullptr};
  std::mt19937_64 rng(seed ^ 0x01);
  double worst_lower = kInf;  // min d_p / i_p
  double worst_spherical = kInf;
  std::size_t with_remote = 0, pairs = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const Instance inst = mixed_instance(rng, i, 24);
    ++result.instances;
    if (inst.space.remote()) ++with_remote;
    const KernelMatrix kernel = inversion_kernel(inst.space, inst.p);
    const ExtendedMetricSpace dp = chain_metric(inst.space, inst.p);
    for (std::size_t a = 0; a < kernel.size(); ++a) {
      for (std::size_t b = a + 1; b < kernel.size(); ++b) {
        ++pairs;
        const double k = kernel(a, b);
        const double c = dp.matrix()(a, b);
        const PointId x = kernel.domain()[a], y = kernel.domain()[b];
        const double dx = inst.space.distance(x, inst.p), dy = inst.space.distance(y, inst.p);
        const double bound = (std::isinf(dx) ? 0.0 : 1.0 / dx) + (std::isinf(dy) ? 0.0 : 1.0 / dy);
        worst_lower = std::min(worst_lower, c / k);
        const auto& lx = inst.space.label(x);
        const auto& ly = inst.space.label(y);
        if (!approx_le(0.25 * k, c)) fail(result, witness(1, inst, pair_detail("i_p/4 > d_p", lx, ly, 0.25 * k, c)));
        if (!approx_le(c, k)) fail(result, witness(1, inst, pair_detail("d_p > i_p", lx, ly, c, k)));
        if (!approx_le(k, bound)) fail(result, witness(1, inst, pair_detail("i_p > 1/d(x,p)+1/d(y,p)", lx, ly, k, bound)));
      }
    }
    if (inst.space.remote()) continue;
    const KernelMatrix s = sphericalization_kernel(inst.space, inst.p);
    const ExtendedMetricSpace dh = sphericalized_metric(inst.space, inst.p);
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        const double k = s(a, b);
        const double c = dh.matrix()(a, b);
        worst_spherical = std::min(worst_spherical, c / k);
        const auto& lx = inst.space.label(s.domain()[a]);
        const auto& ly = inst.space.label(s.domain()[b]);
        if (!approx_le(0.25 * k, c)) fail(result, witness(1, inst, pair_detail("s_p/4 > d^_p", lx, ly, 0.25 * k, c)));
        if (!approx_le(c, k)) fail(result, witness(1, inst, pair_detail("d^_p > s_p", lx, ly, c, k)));
        if (!approx_le(c, 2.0)) fail(result, witness(1, inst, pair_detail("d^_p > 2", lx, ly, c, 2.0)));
      }
    }
  }
  result.details["pairs"] = pairs;
  result.details["instances_with_remote"] = with_remote;
  result.details["min_dp_over_ip"] = json_number(worst_lower);
  result.details["min_dhat_over_sp"] = json_number(worst_spherical);
  return result;
}

CriterionResult verify_inversion_doubling(std::uint64_t seed, std::size_t count, std::size_t exact_cap,
                                          bool inject_fault) {
  CriterionResult result{2, "inversion doubling bound", true, 0, {}, nullptr};
  std::mt19937_64 rng(seed ^ 0x02);
  double max_log_ratio = 0.0;
  std::size_t max_d1 = 0, max_d2 = 0;
  for (std::size_t i = 0; i < count; ++i) {
    Instance inst = [&] {
      if (i % 5 == 4) {
        const CantorSpec spec{2 + i % 2, i % 2 ? 2u : 3u, uniform_real(rng, 0.2, 0.6), 1024};
        auto space = cantor_space(spec);
        const PointId p = random_basepoint(space, rng);
        return Instance{"cantor#" + std::to_string(i), std::move(space), p};
      }
      return mixed_instance(rng, i, 12);
    }();
    ++result.instances;
    DoublingCertificate cert = check_inversion_doubling(inst.space, inst.p, exact_cap);
    if (inject_fault) {
      cert.bound_value = 1.0;
      cert.passed = static_cast<double>(cert.transformed_constant) <= cert.bound_value;
    }
    max_log_ratio = std::max(max_log_ratio, cert.log_ratio);
    max_d1 = std::max(max_d1, cert.source_constant);
    max_d2 = std::max(max_d2, cert.transformed_constant);
    if (!cert.passed) {
      std::ostringstream out;
      out << "D(X,d_p) = " << cert.transformed_constant << " exceeds bound " << cert.bound_value
          << " with D(X,d) = " << cert.source_constant;
      fail(result, witness(2, inst, out.str()));
    }
  }
  result.details["max_log_ratio"] = max_log_ratio;
  result.details["max_source_constant"] = max_d1;
  result.details["max_inverted_constant"] = max_d2;
  result.details["fault_injected"] = inject_fault;
  return result;
}

CriterionResult verify_ptolemy(std::uint64_t seed, std::size_t count) {
  CriterionResult result{3, "Ptolemaic inversion", true, 0, {}, nullptr};
  std::mt19937_64 rng(seed ^ 0x03);
  double max_rel = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = uniform_size(rng, 4, 24);
    Instance inst = [&] {
      if (i % 3 == 2) {
        const std::size_t dim = 3;
        std::vector<std::vector<double>> coords;
        for (std::size_t k = 0; k < n; ++k) {
          std::vector<double> c;
          for (std::size_t j = 0; j < dim; ++j) c.push_back(uniform_real(rng, -1.0, 1.0));
          coords.push_back(c);
        }
        auto space = euclidean_space(coords);
        const PointId p = random_basepoint(space, rng);
        return Instance{"euclidean3d#" + std::to_string(i), std::move(space), p};
      }
      const auto model = i % 3 == 0 ? RandomModel::Euclidean : RandomModel::PerturbedGrid;
      auto space = random_metric_space(rng(), n, model);
      const PointId p = random_basepoint(space, rng);
      return Instance{std::string(to_string(model)) + "#" + std::to_string(i), std::move(space), p};
    }();
    ++result.instances;
    if (!is_ptolemy(inst.space).holds) fail(result, witness(3, inst, "Euclidean instance is not Ptolemaic"));
    const KernelMatrix kernel = inversion_kernel(inst.space, inst.p);
    const ExtendedMetricSpace dp = chain_metric(inst.space, inst.p);
    for (std::size_t a = 0; a < kernel.size(); ++a) {
      for (std::size_t b = a + 1; b < kernel.size(); ++b) {
        const double k = kernel(a, b), c = dp.matrix()(a, b);
        max_rel = std::max(max_rel, std::abs(k - c) / k);
        if (!approx_eq(k, c)) {
          fail(result, witness(3, inst,
                               pair_detail("d_p != i_p", kernel.labels()[a], kernel.labels()[b], c, k)));
        }
      }
    }
  }
  result.details["max_relative_gap"] = max_rel;
  return result;
}

namespace {

struct TransportCase {
  Instance inst;
  std::vector<Chain> chains;  // θ-chains of (X, d_p)
  std::vector<std::vector<PointId>> sequences;  // inverted indices, for the sufficient condition
};

// Rays p = 0, x_i = 1/u_i; every third case also carries off-axis distractor
// points in the plane. Case 0 is the n = 33, u in [0.5, 1] ray whose u-sequence
// is a 1/32-chain.
std::vector<TransportCase> transport_cases(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed ^ 0x04);
  std::vector<TransportCase> cases;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = i == 0 ? 33 : uniform_size(rng, 33, 56);
    const double lo = i == 0 ? 0.5 : uniform_real(rng, 0.2, 0.8);
    const double hi = i == 0 ? 1.0 : lo + uniform_real(rng, 0.2, 1.0);
    std::vector<std::vector<double>> coords{{0.0, 0.0}};
    std::vector<std::string> labels{"p"};
    for (std::size_t k = 0; k < n; ++k) {
      const double u = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
      coords.push_back({1.0 / u, 0.0});
      labels.push_back("x" + std::to_string(k));
    }
    std::string name = "ray";
    if (i % 3 == 2) {
      name = "ray+distractors";
      for (std::size_t k = 0; k < 3; ++k) {
        coords.push_back({uniform_real(rng, -3.0, 3.0), uniform_real(rng, 1.0, 3.0)});
        labels.push_back("z" + std::to_string(k));
      }
    }
    TransportCase tc{Instance{name + "#" + std::to_string(i), euclidean_space(coords, labels), PointId{0}}, {}, {}};
    const ExtendedMetricSpace dp = chain_metric(tc.inst.space, tc.inst.p);
    const PointId first{0}, last{n - 1};
    for (double theta : {1.0 / static_cast<double>(n - 1), 1.0 / 32.0}) {
      if (auto chain = find_theta_chain(dp, theta, first, last)) tc.chains.push_back(std::move(*chain));
    }
    for (std::size_t stride : {1u, 2u, 4u}) {
      std::vector<PointId> seq;
      for (std::size_t k = 0; k < n; k += stride) seq.push_back(PointId{k});
      if (seq.back() != last) seq.push_back(last);
      tc.sequences.push_back(std::move(seq));
    }
    cases.push_back(std::move(tc));
  }
  return cases;
}

}  // namespace

CriterionResult verify_transport(std::uint64_t seed, std::size_t count) {
  CriterionResult result{4, "chain transport under inversion", true, 0, {}, nullptr};
  std::size_t chains = 0, constructed = 0, fallback = 0, at_boundary = 0;
  for (const auto& tc : transport_cases(seed, count)) {
    ++result.instances;
    if (tc.chains.empty()) fail(result, witness(4, tc.inst, "no θ-chain with θ <= 1/32 in (X,d_p)"));
    for (const auto& chain : tc.chains) {
      ++chains;
      if (chain.theta == 1.0 / 32.0) ++at_boundary;
      const double target = std::cbrt(4.0 * chain.theta);
      try {
        const TransportResult t = transport_chain(tc.inst.space, tc.inst.p, chain);
        (t.constructed ? constructed : fallback) += 1;
        if (auto defect = chain_defect(tc.inst.space.matrix(), t.chain.points, target)) {
          fail(result, witness(4, tc.inst, "transported chain invalid: " + *defect));
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Counterexample) throw;
        fail(result, witness(4, tc.inst, e.what()));
      }
    }
  }
  result.details["chains"] = chains;
  result.details["constructed"] = constructed;
  result.details["fallback"] = fallback;
  result.details["theta_one_over_32"] = at_boundary;
  if (at_boundary == 0) fail(result, json{{"detail", "no chain at θ = 1/32 was exercised"}});
  return result;
}

CriterionResult verify_chain_inequalities(std::uint64_t seed, std::size_t count) {
  CriterionResult result{5, "chain inequalities under inversion", true, 0, {}, nullptr};
  std::size_t necessary = 0, sufficient = 0;
  for (const auto& tc : transport_cases(seed, count)) {
    ++result.instances;
    for (const auto& chain : tc.chains) {
      ++necessary;
      const Remark41Report report = remark41_check(tc.inst.space, tc.inst.p, chain);
      if (!report.necessary_holds) {
        fail(result, witness(5, tc.inst, "necessary inequality fails at link " +
                                             std::to_string(*report.first_necessary_failure)));
      }
    }
    const ExtendedMetricSpace dp = chain_metric(tc.inst.space, tc.inst.p);
    for (const auto& seq : tc.sequences) {
      const double theta = sufficient_theta(tc.inst.space, tc.inst.p, seq);
      if (!(theta < 1.0)) continue;
      ++sufficient;
      if (!find_theta_chain(dp, theta, seq.front(), seq.back())) {
        fail(result, witness(5, tc.inst, "sufficient inequality holds but no θ-chain exists"));
      }
    }
  }
  result.details["necessary_checks"] = necessary;
  result.details["sufficient_checks"] = sufficient;
  return result;
}

CriterionResult verify_cantor() {
  CriterionResult result{6, "Cantor certificates", true, 0, {}, nullptr};
  const auto check = [&](const CantorSpec& spec, std::size_t expected_d) {
    const ExtendedMetricSpace space = cantor_space(spec);
    const Instance inst{"cantor(k=" + std::to_string(spec.k) + ",depth=" + std::to_string(spec.depth) + ")",
                        space, PointId{0}};
    ++result.instances;
    const bool ultra = validate_quasi_metric(space.matrix(), 1.0).ok();
    const auto report = doubling_constant(space, CoverMode::Exact);
    const auto disc = critical_theta(space);
    json entry;
    entry["k"] = spec.k;
    entry["depth"] = spec.depth;
    entry["a"] = spec.a;
    entry["ultrametric"] = ultra;
    entry["doubling_constant"] = report.constant;
    entry["theta_star"] = disc.theta_star;
    result.details["spaces"].push_back(entry);
    if (!ultra) fail(result, witness(6, inst, "not an ultrametric"));
    if (report.constant != expected_d) {
      fail(result, witness(6, inst, "doubling constant " + std::to_string(report.constant) + " != " +
                                        std::to_string(expected_d)));
    }
    if (!approx_le(1.0, disc.theta_star)) fail(result, witness(6, inst, "θ* < 1"));
  };
  for (std::size_t depth = 2; depth <= 5; ++depth) check(CantorSpec{2, depth, 0.5, 1024}, 2);
  check(CantorSpec{3, 3, 1.0 / 3.0, 1024}, 3);
  return result;
}

CriterionResult verify_cross_ratio(std::uint64_t seed, std::size_t count) {
  CriterionResult result{7, "cross-ratio invariance", true, 0, {}, nullptr};
  std::mt19937_64 rng(seed ^ 0x07);
  const double lo = std::pow(4.0, -4.0), hi = std::pow(4.0, 4.0);
  std::size_t quadruples = 0;
  double max_kernel_gap = 0.0, min_ratio = kInf, max_ratio = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    Instance inst = [&] {
      if (i % 5 == 4) {
        auto space = cantor_space(CantorSpec{2, 3, uniform_real(rng, 0.2, 0.7), 1024});
        const PointId p = random_basepoint(space, rng);
        return Instance{"cantor#" + std::to_string(i), std::move(space), p};
      }
      return mixed_instance(rng, i, 12);
    }();
    ++result.instances;
    const KernelMatrix kernel = inversion_kernel(inst.space, inst.p);
    const ExtendedMetricSpace dp = chain_metric(inst.space, inst.p);
    std::vector<std::size_t> domain;
    for (auto x : kernel.domain()) domain.push_back(x.index);
    const DistanceMatrix base = inst.space.matrix().induced(domain);
    const auto f = identity_mapping(domain.size());
    const DistortionScatter by_kernel = distortion_scatter(base, kernel.matrix(), f);
    const DistortionScatter by_chain = distortion_scatter(base, dp.matrix(), f);
    if (by_kernel.sampled || by_kernel.skipped || by_chain.skipped) {
      fail(result, witness(7, inst, "quadruple enumeration incomplete"));
    }
    quadruples += by_kernel.pairs.size();
    for (std::size_t q = 0; q < by_kernel.pairs.size(); ++q) {
      const auto [t, u] = by_kernel.pairs[q];
      max_kernel_gap = std::max(max_kernel_gap, std::abs(u - t) / t);
      if (!approx_eq(t, u)) {
        fail(result, witness(7, inst, "crt(Q, i_p) != crt(Q, d) for quadruple #" + std::to_string(q)));
      }
      const double ratio = by_chain.pairs[q].second / by_chain.pairs[q].first;
      min_ratio = std::min(min_ratio, ratio);
      max_ratio = std::max(max_ratio, ratio);
      if (!approx_le(lo, ratio) || !approx_le(ratio, hi)) {
        fail(result, witness(7, inst, "crt(Q, d_p)/crt(Q, d) outside [4^-4, 4^4] for quadruple #" +
                                          std::to_string(q)));
      }
    }
  }
  result.details["quadruples"] = quadruples;
  result.details["max_kernel_relative_gap"] = max_kernel_gap;
  result.details["min_chain_ratio"] = json_number(min_ratio);
  result.details["max_chain_ratio"] = max_ratio;
  return result;
}

CriterionResult verify_appendix(std::uint64_t seed, std::size_t count, std::size_t exact_cap) {
  CriterionResult result{8, "λ-transform doubling and chain transport", true, 0, {}, nullptr};
  std::mt19937_64 rng(seed ^ 0x08);
  const double Ks[] = {1.0, 1.5, 2.0, 3.0};
  const double cs[] = {1.0, 1.5, 2.0};
  std::size_t rejected = 0;
  double max_log_ratio = 0.0;
  const auto quasi_witness = [](const std::string& name, const QuasiMetricSpace& space,
                                const LambdaWeighting& w, const std::string& detail) {
    json j;
    j["criterion"] = 8;
    j["instance"] = name;
    j["detail"] = detail;
    j["document"] = format_document(make_document(name, space));
    j["lambda"] = json::array();
    for (double v : w.lambda) j["lambda"].push_back(json_number(v));
    j["L"] = w.L;
    j["k_prime"] = w.k_prime;
    return j;
  };
  for (std::size_t i = 0; result.instances < count; ++i) {
    const double K = Ks[i % 4];
    const double c = cs[(i / 4) % 3];
    const bool with_remote = i % 3 == 1;
    const std::size_t n = uniform_size(rng, 4, 11);
    const std::uint64_t sub = rng();
    std::optional<LambdaInstance> inst;
    try {
      inst = random_lambda_instance(sub, n, K, c, with_remote);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Generation || ++rejected > 10 * count) throw;
      continue;
    }
    ++result.instances;
    const std::string name = "lambda#" + std::to_string(i);
    const QuasiMetricSpace transformed = lambda_transform(inst->space, inst->weighting);
    const double k2 = inst->weighting.k_prime * inst->weighting.k_prime;
    if (!validate_quasi_metric(transformed.matrix(), k2, transformed.remote_set()).ok()) {
      fail(result, quasi_witness(name, inst->space, inst->weighting, "d_λ is not a K'^2-quasi-metric"));
    }
    const DoublingCertificate cert = check_lambda_doubling(inst->space, inst->weighting, exact_cap);
    max_log_ratio = std::max(max_log_ratio, cert.log_ratio);
    if (!cert.passed) {
      fail(result, quasi_witness(name, inst->space, inst->weighting,
                                 "D(d_λ) = " + std::to_string(cert.transformed_constant) + " exceeds " +
                                     cert.bound));
    }
  }
  json transports = json::array();
  const double theta = std::pow(2.0, -19.0);
  for (double k_prime : {16.0, 20.0, 24.0}) {
    ++result.instances;
    const LambdaChainInstance lc = lambda_chain_instance(k_prime, theta, 2.0);
    const double target = std::cbrt(theta * std::pow(k_prime, 4.0));
    const std::string name = "lambda-chain(K'=" + std::to_string(static_cast<int>(k_prime)) + ")";
    try {
      const TransportResult t = transport_chain_lambda(lc.space, lc.weighting, lc.chain);
      transports.push_back(json{{"k_prime", k_prime},
                                {"points", lc.space.size()},
                                {"target_theta", target},
                                {"constructed", t.constructed},
                                {"chain_length", t.chain.points.size()}});
      if (auto defect = chain_defect(lc.space.matrix(), t.chain.points, target)) {
        fail(result, quasi_witness(name, lc.space, lc.weighting, "transported chain invalid: " + *defect));
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Counterexample) throw;
      fail(result, quasi_witness(name, lc.space, lc.weighting, e.what()));
    }
  }
  result.details["generation_rejections"] = rejected;
  result.details["max_log_ratio"] = max_log_ratio;
  result.details["chain_transports"] = transports;
  return result;
}

RunReport run_verification(const VerifyOptions& options) {
  RunReport report;
  report.command = "verify-theorems";
  report.seed = options.seed;
  report.parameters["suite"] = options.suite == Suite::Extended ? "extended" : "default";
  report.parameters["seed"] = options.seed;
  report.parameters["exact_cap"] = options.exact_cap;
  report.parameters["inject_fault"] = options.inject_fault;
  report.inputs_digest = sha256_hex(report.parameters.dump());

  std::vector<CriterionResult> results;
  results.push_back(verify_sandwich(options.seed));
  results.push_back(verify_inversion_doubling(options.seed, 50, options.exact_cap, options.inject_fault));
  results.push_back(verify_ptolemy(options.seed));
  results.push_back(verify_transport(options.seed));
  results.push_back(verify_chain_inequalities(options.seed));
  results.push_back(verify_cantor());
  results.push_back(verify_cross_ratio(options.seed));
  if (options.suite == Suite::Extended) results.push_back(verify_appendix(options.seed, 20, options.exact_cap));

  bool all = true;
  report.results["criteria"] = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    report.results["criteria"].push_back(r.to_json());
    if (!r.passed) report.witnesses.push_back(r.counterexample);
  }
  report.results["passed"] = all;
  return report;
}

}  // namespace mobius
