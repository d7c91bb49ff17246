// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "mobius/chains.hpp"
#include "mobius/covering.hpp"
#include "mobius/error.hpp"
#include "mobius/numeric.hpp"
#include "mobius/transforms.hpp"
#include "mobius/verify.hpp"
#include "mobius/workbench.hpp"
#include "nlohmann/json.hpp"
#include "oracles.hpp"

using namespace mobius;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kSeed = 1;

struct Outcome {
  bool passed = true;
  std::string summary;
};

int failures = 0;

void report(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("threw: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream line;
  if (limit_s > 0 && secs >= limit_s) {
    o.passed = false;
    line << " [over the " << limit_s << " s limit]";
  }
  if (!o.passed) ++failures;
  std::printf("%s criterion %d: %s (%.2f s) %s%s\n", o.passed ? "PASS" : "FAIL", id, name.c_str(), secs,
              o.summary.c_str(), line.str().c_str());
  std::fflush(stdout);
}

std::string pick(const CriterionResult& r, std::initializer_list<const char*> keys) {
  std::ostringstream out;
  out << "instances=" << r.instances;
  for (const char* k : keys) {
    if (r.details.contains(k)) out << " " << k << "=" << r.details[k].dump();
  }
  if (!r.passed) out << " counterexample=" << r.counterexample.dump();
  return out.str();
}

Outcome from(const CriterionResult& r, std::initializer_list<const char*> keys, bool extra = true) {
  return {r.passed && extra, pick(r, keys)};
}

// Exhaustive references on small spaces.
Outcome oracle_equivalence() {
  std::size_t metrics = 0, covers = 0, chain_queries = 0, mismatches = 0;
  std::string first;
  const auto miss = [&](const std::string& what) {
    if (mismatches++ == 0) first = what;
  };

  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    for (std::size_t n = 4; n <= 8; ++n) {
      auto zoo = testing::small_zoo(seed, n);
      if (n < 8) {
        for (std::size_t i = 0, m = zoo.size(); i < m; ++i) zoo.push_back(complete_with_remote(zoo[i]));
      }
      for (const auto& s : zoo) {
        for (std::size_t p = 0; p < s.size(); ++p) {
          if (s.is_remote(PointId{p})) continue;
          ++metrics;
          const auto check = [&](const DistanceMatrix& got, const DistanceMatrix& want, const char* what) {
            for (std::size_t a = 0; a < got.size(); ++a) {
              for (std::size_t b = 0; b < got.size(); ++b) {
                if (!approx_eq(got(a, b), want(a, b))) miss(what);
              }
            }
          };
          check(chain_metric(s, PointId{p}).matrix(), oracle::chain_metric(inversion_kernel(s, PointId{p}).matrix()),
                "chain_metric (inversion)");
          if (!s.remote()) {
            check(sphericalized_metric(s, PointId{p}).matrix(),
                  oracle::chain_metric(sphericalization_kernel(s, PointId{p}).matrix()), "chain_metric (sphere)");
          }
        }
      }
    }
  }

  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    for (std::size_t n : {6, 9, 12}) {
      for (const auto& s : testing::small_zoo(seed, n)) {
        for (std::size_t c = 0; c < s.size(); ++c) {
          for (double r : candidate_radii(s.matrix())) {
            ++covers;
            if (min_half_cover(s, PointId{c}, r, CoverMode::Exact).count != oracle::min_half_cover(s.matrix(), c, r)) {
              miss("min_half_cover");
            }
          }
        }
      }
    }
  }

  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    for (std::size_t n : {4, 6, 8}) {
      for (const auto& s : testing::small_zoo(seed, n)) {
        for (double theta : {0.2, 0.35, 0.5, 0.7, 0.9}) {
          for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
              if (a == b) continue;
              ++chain_queries;
              const bool got = find_theta_chain(s, theta, PointId{a}, PointId{b}).has_value();
              if (got != oracle::theta_chain_exists(s.matrix(), theta, a, b, n)) miss("find_theta_chain");
            }
          }
        }
      }
    }
  }

  std::ostringstream out;
  out << "chain_metrics=" << metrics << " covers=" << covers << " chain_queries=" << chain_queries
      << " mismatches=" << mismatches;
  if (mismatches) out << " first=" << first;
  return {mismatches == 0, out.str()};
}

Outcome cantor_with_oracle() {
  const CriterionResult r = verify_cantor();
  std::ostringstream out;
  out << pick(r, {});
  bool agree = true;
  for (const auto& entry : r.details["spaces"]) {
    const CantorSpec spec{entry["k"].get<std::size_t>(), entry["depth"].get<std::size_t>(), entry["a"].get<double>(),
                          1024};
    const std::size_t want = oracle::doubling_constant(cantor_space(spec).matrix());
    const std::size_t got = entry["doubling_constant"].get<std::size_t>();
    out << " k" << spec.k << "d" << spec.depth << ":D=" << got << "/oracle=" << want
        << ",theta*=" << entry["theta_star"].get<double>();
    agree = agree && got == want;
  }
  return {r.passed && agree, out.str()};
}

std::string cli_digest(std::uint64_t seed) {
  const std::string s = std::to_string(seed);
  const char* argv[] = {"mobius", "verify-theorems", "--seed", s.c_str()};
  std::ostringstream out, err;
  const int code = run_workbench(4, argv, out, err);
  if (code != 0) throw Error(ErrorKind::Counterexample, "verify-theorems exited with " + std::to_string(code));
  return ordered_json::parse(out.str())["digest"].get<std::string>();
}

Outcome determinism() {
  const std::string a = cli_digest(kSeed);
  const std::string b = cli_digest(kSeed);
  VerifyOptions options;
  options.seed = kSeed;
  const std::string c = run_verification(options).digest();
  const std::string d = run_verification(options).digest();
  return {a == b && c == d, "cli=" + a.substr(0, 16) + "… library=" + c.substr(0, 16) + "…"};
}

}  // namespace

int main() {
  report(1, "sandwich relations", 10, [] {
    return from(verify_sandwich(kSeed, 200), {"pairs", "instances_with_remote", "min_dp_over_ip", "min_dhat_over_sp"});
  });
  report(2, "inversion doubling bound", 300, [] {
    const auto r = verify_inversion_doubling(kSeed, 50);
    return from(r, {"max_log_ratio", "max_source_constant", "max_inverted_constant"}, r.instances >= 50);
  });
  report(3, "Ptolemaic spaces have d_p = i_p", 0, [] {
    return from(verify_ptolemy(kSeed, 60), {"max_relative_gap"});
  });
  report(4, "chain transport under inversion", 30, [] {
    const auto r = verify_transport(kSeed, 24);
    const bool boundary = r.details.value("theta_one_over_32", 0) > 0;
    return from(r, {"chains", "constructed", "fallback", "theta_one_over_32"}, r.instances >= 20 && boundary);
  });
  report(5, "chain inequalities under inversion", 0, [] {
    return from(verify_chain_inequalities(kSeed, 24), {"necessary_checks", "sufficient_checks"});
  });
  report(6, "Cantor certificates", 0, cantor_with_oracle);
  report(7, "cross-ratio invariance", 0, [] {
    return from(verify_cross_ratio(kSeed, 10),
                {"quadruples", "max_kernel_relative_gap", "min_chain_ratio", "max_chain_ratio"});
  });
  report(8, "λ-transform doubling and chain transport", 300, [] {
    const auto r = verify_appendix(kSeed, 20);
    return from(r, {"generation_rejections", "max_log_ratio", "chain_transports"}, r.instances >= 20);
  });
  report(9, "oracle equivalence", 0, oracle_equivalence);
  report(10, "determinism", 0, determinism);
  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
