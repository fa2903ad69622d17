#pragma once
#include <vector>

#include "chv/matrix.hpp"

namespace chv {

// Ordered tuple (A_1,…,A_m) of square matrices of a common dimension. The
// mixed-discriminant operations additionally require m == n.
struct MatrixTuple {
  std::vector<RingMatrix> mats;
  int n() const { return mats.empty() ? 0 : mats[0].n(); }
};

// Throws ConfigError unless all matrices share dimension n (and, when
// require_square_tuple, the tuple length equals n).
void validate_tuple(const MatrixTuple& t, bool require_square_tuple);

// Matrix whose i'th column is the i'th column of mats[alpha[i]] (alpha a
// permutation of {0..n-1}).
RingMatrix column_mix(const MatrixTuple& t, const std::vector<int>& alpha);

// (1/n!) Σ_{α∈S_n} det(column_mix(t, α)). The n!·D sum is accumulated in the
// ring and divided exactly once.
PolyElem mixed_discriminant(const MatrixTuple& t);

// D(x_1·I − A_1, …, x_n·I − A_n) in fresh indeterminates x1..xn; throws
// ConfigError if any x_i name already occurs among the entry indeterminates.
PolyElem mixed_char_poly(const MatrixTuple& t);

// Interns the given names and returns their ids, after verifying that none of
// them already occurs as an indeterminate of any listed matrix. Shared by
// mixed_char_poly and the theorem suites.
std::vector<VarId> fresh_x_vars(const std::vector<std::string>& names,
                                const std::vector<const RingMatrix*>& mats);

}  // namespace chv
