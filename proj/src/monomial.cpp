#include "chv/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace chv {

Monomial Monomial::variable(VarId v, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) m.f_.push_back({v, exp});
  return m;
}

Monomial Monomial::from_factors(std::vector<std::pair<VarId, std::uint32_t>> f) {
  std::sort(f.begin(), f.end());
  Monomial m;
  for (auto& [v, e] : f) {
    if (e == 0) continue;
    if (!m.f_.empty() && m.f_.back().first == v)
      m.f_.back().second += e;
    else
      m.f_.push_back({v, e});
  }
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto& [v, e] : f_) d += e;
  return d;
}

std::uint32_t Monomial::exponent_of(VarId v) const {
  for (auto& [w, e] : f_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  std::size_t i = 0, j = 0;
  while (i < f_.size() && j < o.f_.size()) {
    if (f_[i].first < o.f_[j].first)
      r.f_.push_back(f_[i++]);
    else if (f_[i].first > o.f_[j].first)
      r.f_.push_back(o.f_[j++]);
    else {
      r.f_.push_back({f_[i].first, f_[i].second + o.f_[j].second});
      ++i, ++j;
    }
  }
  for (; i < f_.size(); ++i) r.f_.push_back(f_[i]);
  for (; j < o.f_.size(); ++j) r.f_.push_back(o.f_[j]);
  return r;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
  std::uint64_t da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  std::size_t i = 0, j = 0;
  while (i < a.f_.size() && j < b.f_.size()) {
    // Earlier-created variable present with a positive exponent wins lex.
    if (a.f_[i].first != b.f_[j].first) return a.f_[i].first < b.f_[j].first ? 1 : -1;
    if (a.f_[i].second != b.f_[j].second) return a.f_[i].second > b.f_[j].second ? 1 : -1;
    ++i, ++j;
  }
  if (i < a.f_.size()) return 1;
  if (j < b.f_.size()) return -1;
  return 0;
}

std::pair<Monomial, Monomial> Monomial::split_on(const std::vector<VarId>& split) const {
  Monomial in, out;
  for (auto& fv : f_) {
    if (std::binary_search(split.begin(), split.end(), fv.first))
      in.f_.push_back(fv);
    else
      out.f_.push_back(fv);
  }
  return {in, out};
}

}  // namespace chv
