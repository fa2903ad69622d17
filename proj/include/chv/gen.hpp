#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "chv/family.hpp"
#include "chv/matrix.hpp"

namespace chv {

// Seeded, deterministic family generation. Identical specs (including seed)
// produce bit-identical families; there is no global RNG state.
struct FamilySpec {
  std::string strategy = "powers-of-one";  // diagonal-generic | powers-of-one |
                                           // circulant | conjugated-diagonal
  int n = 2;
  int k = 2;
  std::uint64_t seed = 1;
  bool symbolic = false;
  int magnitude = 3;  // random integer entries drawn from [-magnitude, magnitude]
};

// Throws ConfigError on invalid sizes or an unknown strategy token.
void validate(const FamilySpec& spec);

// Pairwise commuting B_1..B_k.
//   diagonal-generic    diag of distinct fresh-named indeterminates (always
//                       symbolic by construction)
//   powers-of-one       B_j = C^j for one random integer (or generic symbolic) C
//   circulant           integer (or symbolic-coefficient) polynomials in the
//                       cyclic shift matrix
//   conjugated-diagonal P D_j P^{-1} with P a product of seeded elementary row
//                       operations (unimodular, exact integer inverse)
std::vector<RingMatrix> gen_commuting(const FamilySpec& spec);

// A_i = sum_j e_{ij} C B_j with random antisymmetric integer (e_{ij}) and a
// random integer C, so that sum_i A_iB_i telescopes to zero. k = 1 forces
// A_1 = 0 and marks the family degenerate.
ConstraintFamily gen_constrained(const std::vector<RingMatrix>& B, std::uint64_t seed,
                                 int magnitude = 3);

// Same construction with a fully generic symbolic C (entries u{r}{c}) and the
// canonical antisymmetric e_{ij} = +1 for i < j. Deterministic, seedless.
ConstraintFamily constrained_family_symbolic_C(const std::vector<RingMatrix>& B);

// One global commuting pool of n*k matrices (drawn with spec's strategy), cut
// into rows; per row an independent antisymmetric e and integer C_i build the
// A row so that every row constraint holds.
MixedConstraintFamily gen_mixed_constrained(const FamilySpec& spec);

// Mixed analogue of the symbolic-C construction: diagonal symbolic pool
// (entries b{t}{p} for flat index t) and per-row generic symbolic C_i
// (entries u{i}_{r}{c}).
MixedConstraintFamily mixed_family_symbolic_C(int n, int k);

// A_1 = -I, A_2 = M, B_1 = M, B_2 = I.
ConstraintFamily specialize_CH(const RingMatrix& M);

// k = 2, A_1 = A, B_1 = B, A_2 = -B, B_2 = A. Throws HypothesisViolation
// unless AB = BA.
ConstraintFamily specialize_cor12(const RingMatrix& A, const RingMatrix& B);

// A_{i,1} = I, A_{i,2} = M_i, B_{i,1} = M_i, B_{i,2} = -I. Throws
// HypothesisViolation unless the M_i commute pairwise.
MixedConstraintFamily specialize_cor16(const std::vector<RingMatrix>& Ms);

// A random n x n integer matrix with entries in [-magnitude, magnitude],
// resampled until nonzero.
RingMatrix random_int_matrix(int n, std::uint64_t seed, int magnitude = 3);

}  // namespace chv
