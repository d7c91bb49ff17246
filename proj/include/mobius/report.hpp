#pragma once

// Machine-readable run reports. The digest covers every field except the wall
// time, so identical inputs and seed give identical digests.

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace mobius {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunReport {
  std::string command;
  std::string inputs_digest;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
  std::optional<std::uint64_t> seed;
  std::string tool_version = kToolVersion;
  double wall_time_ms = 0.0;

  nlohmann::ordered_json to_json() const;
  /// SHA-256 (hex) of the canonical JSON without wall time.
  std::string digest() const;
};

std::string sha256_hex(const std::string& data);

/// +inf and NaN have no JSON literal; they are written as strings.
nlohmann::ordered_json json_number(double value);

}  // namespace mobius
