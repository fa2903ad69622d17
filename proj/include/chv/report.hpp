#pragma once
#include <cstdint>
#include <string>

#include "json.hpp"

namespace chv {

// One verification outcome. Serializes as
//   { "theorem": string, "params": object,
//     "status": "pass"|"fail"|"hypothesis_violation",
//     "witness": object|null, "counts": object, "elapsed_ms": number }
struct VerificationReport {
  std::string theorem;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::string status = "pass";  // "pass" | "fail" | "hypothesis_violation"
  nlohmann::ordered_json witness;  // null unless status != "pass"
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  std::int64_t elapsed_ms = 0;

  bool passed() const { return status == "pass"; }
  nlohmann::ordered_json to_json() const;
  static VerificationReport from_json(const nlohmann::ordered_json& j);
};

}  // namespace chv
