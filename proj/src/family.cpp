#include "chv/family.hpp"

#include "chv/error.hpp"

namespace chv {
namespace {

void check_shape(int n, int k, const std::vector<RingMatrix>& mats, const char* which) {
  if (static_cast<int>(mats.size()) != k)
    throw ConfigError(std::string(which) + ": expected " + std::to_string(k) + " matrices");
  for (const auto& m : mats)
    if (m.n() != n) throw ConfigError(std::string(which) + ": matrix dimension is not n");
}

}  // namespace

std::optional<HypothesisIssue> check_family(const ConstraintFamily& f) {
  if (f.n < 1 || f.k < 1) throw ConfigError("family sizes must satisfy n >= 1, k >= 1");
  check_shape(f.n, f.k, f.A, "A");
  check_shape(f.n, f.k, f.B, "B");
  for (int i = 0; i < f.k; ++i)
    for (int j = i + 1; j < f.k; ++j)
      if (f.B[i] * f.B[j] != f.B[j] * f.B[i])
        return HypothesisIssue{"commutation", "B[" + std::to_string(i + 1) + "]B[" +
                                                  std::to_string(j + 1) + "] != B[" +
                                                  std::to_string(j + 1) + "]B[" +
                                                  std::to_string(i + 1) + "]"};
  RingMatrix s(f.n);
  for (int i = 0; i < f.k; ++i) s = s + f.A[i] * f.B[i];
  if (!s.is_zero()) return HypothesisIssue{"constraint", "A_1B_1 + ... + A_kB_k != 0"};
  return std::nullopt;
}

std::optional<HypothesisIssue> check_family(const MixedConstraintFamily& f) {
  if (f.n < 1 || f.k < 1) throw ConfigError("family sizes must satisfy n >= 1, k >= 1");
  if (static_cast<int>(f.A.size()) != f.n || static_cast<int>(f.B.size()) != f.n)
    throw ConfigError("mixed family: expected n rows");
  for (int i = 0; i < f.n; ++i) {
    check_shape(f.n, f.k, f.A[i], "A row");
    check_shape(f.n, f.k, f.B[i], "B row");
  }
  for (int i = 0; i < f.n; ++i)
    for (int i2 = i + 1; i2 < f.n; ++i2)
      for (int j = 0; j < f.k; ++j)
        for (int j2 = 0; j2 < f.k; ++j2)
          if (f.B[i][j] * f.B[i2][j2] != f.B[i2][j2] * f.B[i][j])
            return HypothesisIssue{
                "commutation", "B[" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                   "] does not commute with B[" + std::to_string(i2 + 1) + "," +
                                   std::to_string(j2 + 1) + "]"};
  for (int i = 0; i < f.n; ++i) {
    RingMatrix s(f.n);
    for (int j = 0; j < f.k; ++j) s = s + f.A[i][j] * f.B[i][j];
    if (!s.is_zero())
      return HypothesisIssue{"constraint", "row " + std::to_string(i + 1) +
                                               ": sum_j A[i,j]B[i,j] != 0"};
  }
  return std::nullopt;
}

void require_valid(const ConstraintFamily& f) {
  if (auto issue = check_family(f))
    throw HypothesisViolation(issue->kind, issue->where, "family fails its hypotheses");
}

void require_valid(const MixedConstraintFamily& f) {
  if (auto issue = check_family(f))
    throw HypothesisViolation(issue->kind, issue->where, "family fails its hypotheses");
}

}  // namespace chv
