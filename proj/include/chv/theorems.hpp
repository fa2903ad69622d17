#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "chv/family.hpp"
#include "chv/matrix.hpp"
#include "chv/report.hpp"
#include "chv/xpoly.hpp"

namespace chv {

// p(x_1..x_k) = det(A_1x_1 + ... + A_kx_k) over fresh indeterminates x1..xk;
// homogeneous of total degree n. Throws ConfigError on dimension mismatch or
// when an x-name collides with an entry indeterminate.
XPolynomial multivar_char_poly(const std::vector<RingMatrix>& A);

// phat((x_{i,j})) = D(sum_j A[1][j]x_{1,j}, ..., sum_j A[n][j]x_{n,j}) over
// row-major indeterminates x{i}_{j}. Every monomial carries exactly one
// variable per row, so ascending flat order is the row-ascending product
// order.
XPolynomial mixed_multivar_char_poly(const std::vector<std::vector<RingMatrix>>& A);

// Theorem-level verifiers. Hypothesis failures are reported as status
// "hypothesis_violation" (never confused with a theorem failure); dimension
// and naming problems throw ConfigError.
VerificationReport verify_phillips(const ConstraintFamily& f);
VerificationReport verify_classic_ch(const RingMatrix& M);
VerificationReport verify_cor_2matrices(const RingMatrix& A, const RingMatrix& B);
// No hypotheses; ascending-order products. Also evaluates one random
// alternative monomial ordering (drawn from order_seed) and the fully
// symmetrized average, recording their outcomes in counts.
VerificationReport verify_bapat_roy(const std::vector<RingMatrix>& A, std::uint64_t order_seed);
VerificationReport verify_mixed_theorem(const MixedConstraintFamily& f);

// Signed-weight sums over the combinatorial families; zero under the family
// hypotheses. Throw HypothesisViolation when f violates its invariants.
PolyElem lemma_G_sum(const ConstraintFamily& f, int b, int e);
PolyElem lemma_H_sum(const ConstraintFamily& f, int b, int e);
// Sum over pathmutations equals p(B)_{b,e}; needs only B-commutation, not the
// constraint sum.
VerificationReport pathmutation_entry_identity(const ConstraintFamily& f, int b, int e);

PolyElem lemma_G2_sum(const MixedConstraintFamily& f, int b, int e);
PolyElem lemma_H2_sum(const MixedConstraintFamily& f, int b, int e);
// Passes iff the sum over 2-pathmutations equals n! * phat(B)_{b,e} (needs
// only cross-row commutation); counts.matches_unscaled_form records whether the
// unscaled form holds as well.
VerificationReport pathmutation2_entry_identity(const MixedConstraintFamily& f, int b, int e);

// det_B minor: (-1)^{i+j} sum over sigma with sigma_i = j of
// sgn(sigma) prod_{r != i} M^B_{r,sigma_r}, where M^B_{r,c} = sum_l
// (A_l)_{r,c} B_l. Throws HypothesisViolation on invalid f, ConfigError on
// bad indices. n = 1 gives the identity matrix.
RingMatrix det_B_minor(const ConstraintFamily& f, int i, int j);
// Checks sum_s (-1)^{s+b} (M^B_{s,b} * det_B M[s|b])_{b,e} = 0.
VerificationReport phillips_laplace_check(const ConstraintFamily& f, int b, int e);

// Aggregated drivers over all (b,e) pairs (the CLI's lemmas / lemmas2 /
// laplace theorems). The symbolic drivers build their own families: the
// constrained symbolic-C family for the G-sum and a free symbolic A with a
// commuting diagonal B for the H-sum and entry identity; at n = k = 2 they
// attach the eight signed term families under params["term_families"].
VerificationReport verify_lemma_suite(const ConstraintFamily& f);
VerificationReport verify_lemmas_symbolic(int n, int k);
VerificationReport verify_lemma2_suite(const MixedConstraintFamily& f);
VerificationReport verify_lemmas2_symbolic(int n, int k);
VerificationReport verify_laplace_suite(const ConstraintFamily& f);

// Canonical signed term families of G(1,2) (resp. G2(1,2)) at n = k = 2 with
// formal labels r, s (and alpha symbols a1, a2): label-independent monomial
// shapes like "+A[r](1,1)*A[s](2,2)*B[r](1,1)*B[s](1,2)", in first-occurrence
// enumeration order.
std::vector<std::string> term_families_unhatted();
std::vector<std::string> term_families_hatted();

}  // namespace chv
