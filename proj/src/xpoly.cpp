#include "chv/xpoly.hpp"

#include <algorithm>
#include <map>

#include "chv/error.hpp"

namespace chv {

XPolynomial collect(const PolyElem& p, const std::vector<VarId>& xvars) {
  std::vector<VarId> sorted_x = xvars;
  std::sort(sorted_x.begin(), sorted_x.end());

  std::map<std::vector<std::uint32_t>, PolyElem> groups;
  for (const auto& t : p.terms()) {
    auto [xpart, rest] = t.m.split_on(sorted_x);
    std::vector<std::uint32_t> exps(xvars.size(), 0);
    for (const auto& [v, e] : xpart.factors()) {
      auto it = std::find(xvars.begin(), xvars.end(), v);
      exps[static_cast<std::size_t>(it - xvars.begin())] = e;
    }
    groups[std::move(exps)] += PolyElem::from_terms({{rest, t.c}});
  }

  XPolynomial r;
  r.xvars = xvars;
  for (auto it = groups.rbegin(); it != groups.rend(); ++it)
    if (!it->second.is_zero()) r.terms.push_back(XTerm{it->first, std::move(it->second)});
  return r;
}

std::optional<std::pair<int, int>> find_noncommuting(const std::vector<RingMatrix>& B) {
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = i + 1; j < B.size(); ++j)
      if (B[i] * B[j] != B[j] * B[i]) return std::make_pair(static_cast<int>(i), static_cast<int>(j));
  return std::nullopt;
}

namespace {

RingMatrix matrix_power(const RingMatrix& m, std::uint32_t e) {
  RingMatrix r = RingMatrix::identity(m.n());
  for (std::uint32_t i = 0; i < e; ++i) r = r * m;
  return r;
}

}  // namespace

RingMatrix substitute_with_order(const XPolynomial& p, const std::vector<RingMatrix>& B,
                                 const std::vector<int>& order) {
  if (B.size() != p.xvars.size())
    throw ConfigError("substitute: matrix count differs from x-variable count");
  int n = B.empty() ? 0 : B[0].n();
  for (const auto& m : B)
    if (m.n() != n) throw ConfigError("substitute: mixed matrix dimensions");
  RingMatrix sum(n);
  for (const auto& t : p.terms) {
    RingMatrix prod = RingMatrix::identity(n);
    for (int idx : order)
      if (t.exps[idx] > 0) prod = prod * matrix_power(B[idx], t.exps[idx]);
    sum = sum + prod.scaled(t.coef);
  }
  return sum;
}

RingMatrix substitute_ascending(const XPolynomial& p, const std::vector<RingMatrix>& B) {
  std::vector<int> order(p.xvars.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  return substitute_with_order(p, B, order);
}

RingMatrix substitute_commuting(const XPolynomial& p, const std::vector<RingMatrix>& B) {
  if (auto bad = find_noncommuting(B)) {
    std::string where = "B[" + std::to_string(bad->first + 1) + "]B[" +
                        std::to_string(bad->second + 1) + "] != B[" +
                        std::to_string(bad->second + 1) + "]B[" + std::to_string(bad->first + 1) +
                        "]";
    throw HypothesisViolation("commutation", where, "matrices do not commute pairwise");
  }
  return substitute_ascending(p, B);
}

RingMatrix substitute_symmetrized(const XPolynomial& p, const std::vector<RingMatrix>& B) {
  if (B.size() != p.xvars.size())
    throw ConfigError("substitute: matrix count differs from x-variable count");
  int n = B.empty() ? 0 : B[0].n();
  RingMatrix sum(n);
  for (const auto& t : p.terms) {
    std::vector<int> seq;
    for (std::size_t i = 0; i < t.exps.size(); ++i)
      for (std::uint32_t e = 0; e < t.exps[i]; ++e) seq.push_back(static_cast<int>(i));
    // Average the product over all arrangements of the factor sequence.
    RingMatrix acc(n);
    Int arrangements = 0;
    std::sort(seq.begin(), seq.end());
    do {
      RingMatrix prod = RingMatrix::identity(n);
      for (int idx : seq) prod = prod * B[idx];
      acc = acc + prod;
      ++arrangements;
    } while (std::next_permutation(seq.begin(), seq.end()));
    sum = sum + acc.scaled(PolyElem(Rational(1, arrangements))).scaled(t.coef);
  }
  return sum;
}

bool is_homogeneous(const XPolynomial& p, std::uint64_t d) {
  for (const auto& t : p.terms) {
    std::uint64_t total = 0;
    for (auto e : t.exps) total += e;
    if (total != d) return false;
  }
  return true;
}

bool is_multilinear(const XPolynomial& p) {
  for (const auto& t : p.terms)
    for (auto e : t.exps)
      if (e > 1) return false;
  return true;
}

}  // namespace chv
