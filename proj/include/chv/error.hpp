#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>

namespace chv {

// Malformed input or configuration: bad files, bad dimensions, reserved-name
// collisions. CLI maps this to exit 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Expression-grammar syntax error; offset is the byte position in the input.
struct ParseError : ConfigError {
  ParseError(std::size_t offset, const std::string& what)
      : ConfigError("parse error at offset " + std::to_string(offset) + ": " + what),
        offset(offset) {}
  std::size_t offset;
};

// A family failed its own hypotheses (commutation or constraint sum). Reported
// distinctly from theorem failure; CLI maps user-supplied cases to exit 3.
struct HypothesisViolation : std::runtime_error {
  HypothesisViolation(std::string kind, std::string where, std::string detail)
      : std::runtime_error("hypothesis violation (" + kind + ") at " + where + ": " + detail),
        kind(std::move(kind)), where(std::move(where)), detail(std::move(detail)) {}
  std::string kind;    // "commutation" | "constraint"
  std::string where;   // e.g. "B[1]B[3] != B[3]B[1]" or "row 2"
  std::string detail;  // offending entry, canonical form
};

}  // namespace chv
