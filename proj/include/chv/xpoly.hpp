#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "chv/matrix.hpp"

namespace chv {

// Polynomial in dedicated x-indeterminates with ring-element coefficients:
// a list of (exponent vector over xvars, PolyElem) pairs. The x-variables are
// disjoint from all entry indeterminates, and no coefficient is zero.
struct XTerm {
  std::vector<std::uint32_t> exps;  // aligned with XPolynomial::xvars
  PolyElem coef;
};

struct XPolynomial {
  std::vector<VarId> xvars;
  std::vector<XTerm> terms;  // descending lex by exps; no duplicates
};

// Regroups p as a polynomial in the given x-variables. Every monomial of p is
// split into its x-part and coefficient part; coefficient parts must not
// mention any x-variable (guaranteed by the split).
XPolynomial collect(const PolyElem& p, const std::vector<VarId>& xvars);

// First non-commuting pair (i, j), i < j, if any.
std::optional<std::pair<int, int>> find_noncommuting(const std::vector<RingMatrix>& B);

// Evaluates p at matrices B (B[i] for xvars[i]): each monomial becomes the
// product of matrix powers taken in the index order given by `order` (a
// permutation of 0..k-1), scaled by its coefficient.
RingMatrix substitute_with_order(const XPolynomial& p, const std::vector<RingMatrix>& B,
                                 const std::vector<int>& order);

// Ascending-index product order (the canonical order used everywhere).
RingMatrix substitute_ascending(const XPolynomial& p, const std::vector<RingMatrix>& B);

// Checks pairwise commutation first (throws HypothesisViolation naming the
// offending pair), then substitutes; the order is then immaterial.
RingMatrix substitute_commuting(const XPolynomial& p, const std::vector<RingMatrix>& B);

// Averages each monomial over every arrangement of its factor sequence; used
// to measure order sensitivity on non-commuting inputs.
RingMatrix substitute_symmetrized(const XPolynomial& p, const std::vector<RingMatrix>& B);

// True iff every term has total x-degree d.
bool is_homogeneous(const XPolynomial& p, std::uint64_t d);

// True iff every exponent is at most 1 (multilinearity).
bool is_multilinear(const XPolynomial& p);

}  // namespace chv
