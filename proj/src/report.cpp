#include "mobius/report.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>

#include "mobius/error.hpp"

namespace mobius {

namespace {

nlohmann::ordered_json body(const RunReport& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["inputs_digest"] = r.inputs_digest;
  j["parameters"] = r.parameters;
  j["results"] = r.results;
  j["witnesses"] = r.witnesses;
  j["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
  j["tool_version"] = r.tool_version;
  return j;
}

}  // namespace

nlohmann::ordered_json RunReport::to_json() const {
  auto j = body(*this);
  j["digest"] = digest();
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

std::string RunReport::digest() const { return sha256_hex(body(*this).dump()); }

std::string sha256_hex(const std::string& data) {
  unsigned char hash[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), hash, &length, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::State, "SHA-256 computation failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", hash[i]);
    hex += buf;
  }
  return hex;
}

nlohmann::ordered_json json_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return value;
}

}  // namespace mobius
