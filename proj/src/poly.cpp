#include "chv/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace chv {

Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

PolyElem::PolyElem(const Rational& c) {
  if (c != 0) t_.push_back(Term{Monomial{}, c});
}

PolyElem PolyElem::variable(VarId v) {
  PolyElem p;
  p.t_.push_back(Term{Monomial::variable(v), Rational(1)});
  return p;
}

Rational PolyElem::constant_value() const {
  if (t_.empty()) return Rational(0);
  if (t_.size() == 1 && t_[0].m.is_one()) return t_[0].c;
  throw std::logic_error("constant_value() on non-constant polynomial");
}

Rational PolyElem::coeff_of(const Monomial& m) const {
  // Binary search over the descending-ordered term list.
  auto it = std::lower_bound(
      t_.begin(), t_.end(), m,
      [](const Term& t, const Monomial& key) { return Monomial::cmp(t.m, key) > 0; });
  if (it != t_.end() && Monomial::cmp(it->m, m) == 0) return it->c;
  return Rational(0);
}

PolyElem PolyElem::operator+(const PolyElem& o) const {
  PolyElem r;
  r.t_.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    int c = Monomial::cmp(t_[i].m, o.t_[j].m);
    if (c > 0) {
      r.t_.push_back(t_[i++]);
    } else if (c < 0) {
      r.t_.push_back(o.t_[j++]);
    } else {
      Rational s = t_[i].c + o.t_[j].c;
      if (s != 0) r.t_.push_back(Term{t_[i].m, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
  for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
  return r;
}

PolyElem PolyElem::operator-() const {
  PolyElem r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

PolyElem PolyElem::scaled(const Rational& c) const {
  if (c == 0) return PolyElem{};
  PolyElem r = *this;
  for (auto& t : r.t_) t.c *= c;
  return r;
}

PolyElem PolyElem::operator*(const PolyElem& o) const {
  if (t_.empty() || o.t_.empty()) return PolyElem{};
  // Multiply by accumulating cross products, then normalize once.
  std::vector<Term> acc;
  acc.reserve(t_.size() * o.t_.size());
  for (const auto& a : t_)
    for (const auto& b : o.t_) acc.push_back(Term{a.m * b.m, a.c * b.c});
  return from_terms(std::move(acc));
}

PolyElem PolyElem::pow(std::uint32_t e) const {
  PolyElem r{Rational(1)};
  PolyElem base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool PolyElem::operator==(const PolyElem& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (std::size_t i = 0; i < t_.size(); ++i)
    if (t_[i].c != o.t_[i].c || Monomial::cmp(t_[i].m, o.t_[i].m) != 0) return false;
  return true;
}

PolyElem PolyElem::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return Monomial::cmp(a.m, b.m) > 0; });
  PolyElem r;
  r.t_.reserve(terms.size());
  for (auto& t : terms) {
    if (!r.t_.empty() && Monomial::cmp(r.t_.back().m, t.m) == 0) {
      r.t_.back().c += t.c;
      if (r.t_.back().c == 0) r.t_.pop_back();
    } else if (t.c != 0) {
      r.t_.push_back(std::move(t));
    }
  }
  return r;
}

namespace {

void append_abs_term(std::string& out, const PolyElem::Term& t) {
  Rational a = t.c < 0 ? Rational(-t.c) : t.c;
  bool coef_shown = !(a == 1) || t.m.is_one();
  if (coef_shown) out += rational_str(a);
  bool first_factor = !coef_shown;
  for (const auto& [v, e] : t.m.factors()) {
    if (!first_factor) out += '*';
    first_factor = false;
    out += Interner::instance().name_of(v);
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
}

}  // namespace

std::string PolyElem::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (i == 0) {
      if (t_[0].c < 0) out += '-';
    } else {
      out += t_[i].c < 0 ? " - " : " + ";
    }
    append_abs_term(out, t_[i]);
  }
  return out;
}

}  // namespace chv
