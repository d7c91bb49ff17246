#pragma once

// Certificate sweeps over generated instances. Each criterion is a pure
// function of its seed; the CLI's verify-theorems command and the acceptance
// binary both run them.

#include <cstddef>
#include <cstdint>
#include <string>

#include "json.hpp"
#include "mobius/report.hpp"

namespace mobius {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = true;
  std::size_t instances = 0;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  nlohmann::ordered_json counterexample;  // null when passed

  nlohmann::ordered_json to_json() const;
};

/// ¼ i_p <= d_p <= i_p <= 1/d(x,p) + 1/d(y,p) and ¼ s_p <= d̂_p <= s_p <= 2.
CriterionResult verify_sandwich(std::uint64_t seed, std::size_t count = 200);

/// D(X,d_p) <= D(X,d)^10 + 1 with exact covers. `inject_fault` replaces the
/// bound by 1 to exercise the failure path.
CriterionResult verify_inversion_doubling(std::uint64_t seed, std::size_t count = 50,
                                          std::size_t exact_cap = 16, bool inject_fault = false);

/// d_p = i_p on Euclidean instances.
CriterionResult verify_ptolemy(std::uint64_t seed, std::size_t count = 60);

/// θ-chains of (X,d_p) with θ <= 1/32 transport to ∛(4θ)-chains of (X,d).
CriterionResult verify_transport(std::uint64_t seed, std::size_t count = 24);

/// Necessary and sufficient chain inequalities on the transport instances.
CriterionResult verify_chain_inequalities(std::uint64_t seed, std::size_t count = 24);

/// Symbolic Cantor sets: ultrametric, doubling constant, uniform disconnectedness.
CriterionResult verify_cantor();

/// crt(Q, i_p) = crt(Q, d) and crt(Q, d_p) / crt(Q, d) in [4^-4, 4^4].
CriterionResult verify_cross_ratio(std::uint64_t seed, std::size_t count = 10);

/// λ-transform doubling bound and chain transport.
CriterionResult verify_appendix(std::uint64_t seed, std::size_t count = 20, std::size_t exact_cap = 16);

enum class Suite { Default, Extended };

struct VerifyOptions {
  Suite suite = Suite::Default;
  std::uint64_t seed = 1;
  std::size_t exact_cap = 16;
  bool inject_fault = false;
};

/// Criteria 1-7, plus the appendix sweep in the extended suite.
RunReport run_verification(const VerifyOptions& options);

}  // namespace mobius
