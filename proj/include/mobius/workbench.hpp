#pragma once

// Command-line front end: validate, invert, doubling, chains, verify-theorems,
// generate and distortion. Exit codes: 0 success, 1 semantic failure
// (violation or counterexample), 2 usage, parse or contract error.

#include <cstdint>
#include <ostream>

namespace mobius {

/// Seed used when --seed is absent: $MOBIUS_SEED if set, else 1.
std::uint64_t default_seed();

int run_workbench(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mobius
