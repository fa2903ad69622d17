#pragma once
#include <algorithm>
#include <vector>

#include "chv/poly.hpp"

namespace chv {

// Dense square matrix over the polynomial ring. One concrete element type is
// enough here: integer matrices are just constant polynomials, and everything
// downstream (determinants, substitution, weights) mixes the two freely.
class RingMatrix {
 public:
  RingMatrix() = default;
  explicit RingMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {}
  static RingMatrix identity(int n);

  int n() const { return n_; }
  PolyElem& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  const PolyElem& operator()(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * n_ + j];
  }

  RingMatrix operator+(const RingMatrix& o) const;
  RingMatrix operator-(const RingMatrix& o) const;
  RingMatrix operator*(const RingMatrix& o) const;
  RingMatrix scaled(const PolyElem& c) const;
  RingMatrix operator-() const { return scaled(PolyElem(-1)); }
  bool operator==(const RingMatrix& o) const;
  bool operator!=(const RingMatrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_constant() const;  // every entry a rational constant

 private:
  int n_ = 0;
  std::vector<PolyElem> e_;
};

// Minor: delete row i and column j (0-based); n must be >= 1.
RingMatrix minor(const RingMatrix& m, int i, int j);

// Determinant by signed permutation expansion (exact over the ring). Guarded
// against blowup: throws ConfigError for symbolic input with n > 5.
PolyElem det_expansion(const RingMatrix& m);

// Fraction-free Bareiss elimination; constant matrices only.
PolyElem det_bareiss(const RingMatrix& m);

// Dispatches to Bareiss on constant matrices, expansion otherwise.
PolyElem det(const RingMatrix& m);

// Permanent via unsigned permutation expansion; same n <= 5 symbolic guard.
PolyElem permanent(const RingMatrix& m);

// Runs fn(perm) for every permutation of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do {
    fn(static_cast<const std::vector<int>&>(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

int permutation_sign(const std::vector<int>& p);

}  // namespace chv
