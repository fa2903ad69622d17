#pragma once
#include <optional>
#include <string>
#include <vector>

#include "chv/matrix.hpp"

namespace chv {

// Hypotheses of the multivariate theorem: B_1..B_k pairwise commute and
// A_1B_1 + ... + A_kB_k = 0.
struct ConstraintFamily {
  int n = 0;
  int k = 0;
  std::vector<RingMatrix> A;
  std::vector<RingMatrix> B;
  bool degenerate = false;  // k = 1 families are forced to A_1 = 0
};

// Hypotheses of the mixed theorem: B_{i,j} commute across distinct rows and
// every row satisfies sum_j A_{i,j}B_{i,j} = 0.
struct MixedConstraintFamily {
  int n = 0;
  int k = 0;
  std::vector<std::vector<RingMatrix>> A;  // n rows of k matrices
  std::vector<std::vector<RingMatrix>> B;
};

struct HypothesisIssue {
  std::string kind;   // "commutation" | "constraint"
  std::string where;  // human-readable location
};

// Returns the first violated hypothesis, if any. Dimension errors throw
// ConfigError; hypothesis checks never throw.
std::optional<HypothesisIssue> check_family(const ConstraintFamily& f);
std::optional<HypothesisIssue> check_family(const MixedConstraintFamily& f);

// Throws HypothesisViolation when a check fails.
void require_valid(const ConstraintFamily& f);
void require_valid(const MixedConstraintFamily& f);

}  // namespace chv
