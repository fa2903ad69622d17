#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "chv/interner.hpp"

namespace chv {

// Sparse monomial: (variable id, exponent) pairs, ids strictly increasing,
// exponents > 0. The empty monomial is 1.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(VarId v, std::uint32_t exp = 1);

  const std::vector<std::pair<VarId, std::uint32_t>>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  std::uint64_t degree() const;
  std::uint32_t exponent_of(VarId v) const;

  Monomial operator*(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return f_ == o.f_; }

  // Graded-lex: higher total degree is greater; ties broken at the first
  // variable (creation order) whose exponents differ, larger exponent greater.
  // Returns <0, 0, >0 for a<b, a==b, a>b.
  static int cmp(const Monomial& a, const Monomial& b);

  // Splits into (part over vars in `split`, remaining part). `split` must be sorted.
  std::pair<Monomial, Monomial> split_on(const std::vector<VarId>& split) const;

  static Monomial from_factors(std::vector<std::pair<VarId, std::uint32_t>> f);

 private:
  std::vector<std::pair<VarId, std::uint32_t>> f_;
};

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::cmp(a, b) > 0; }
};

}  // namespace chv
