#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "chv/monomial.hpp"
#include "chv/rational.hpp"

namespace chv {

// Element of the commutative ring Q[all interned indeterminates]: sparse sum
// of terms with nonzero rational coefficients, kept in strictly descending
// graded-lex order. Canonical by construction, so equality is representation
// equality and serialization is deterministic.
class PolyElem {
 public:
  struct Term {
    Monomial m;
    Rational c;
  };

  PolyElem() = default;                      // zero
  PolyElem(long v) : PolyElem(Rational(v)) {}
  explicit PolyElem(const Rational& c);
  static PolyElem variable(VarId v);
  static PolyElem variable(std::string_view name) { return variable(var(name)); }

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  Rational constant_value() const;           // throws unless is_constant()
  std::uint64_t degree() const { return t_.empty() ? 0 : t_[0].m.degree(); }
  const std::vector<Term>& terms() const { return t_; }
  Rational coeff_of(const Monomial& m) const;

  PolyElem operator+(const PolyElem& o) const;
  PolyElem operator-() const;
  PolyElem operator-(const PolyElem& o) const { return *this + (-o); }
  PolyElem operator*(const PolyElem& o) const;
  PolyElem& operator+=(const PolyElem& o) { return *this = *this + o; }
  PolyElem& operator-=(const PolyElem& o) { return *this = *this - o; }
  PolyElem& operator*=(const PolyElem& o) { return *this = *this * o; }
  PolyElem scaled(const Rational& c) const;
  PolyElem pow(std::uint32_t e) const;
  bool operator==(const PolyElem& o) const;
  bool operator!=(const PolyElem& o) const { return !(*this == o); }

  // Canonical text: descending graded-lex terms, "3*a^2*b - 1/2*c + 4".
  // Round-trips through parse_entry.
  std::string str() const;

  static PolyElem from_terms(std::vector<Term> terms);  // sorts and collapses

 private:
  std::vector<Term> t_;
};

inline PolyElem operator*(const Rational& c, const PolyElem& p) { return p.scaled(c); }

}  // namespace chv
