#include "chv/mixed.hpp"

#include <set>
#include <string>

#include "chv/error.hpp"

namespace chv {

void validate_tuple(const MatrixTuple& t, bool require_square_tuple) {
  if (t.mats.empty()) throw ConfigError("empty matrix tuple");
  int n = t.mats[0].n();
  for (const auto& m : t.mats)
    if (m.n() != n) throw ConfigError("matrix tuple mixes dimensions");
  if (require_square_tuple && static_cast<int>(t.mats.size()) != n)
    throw ConfigError("mixed discriminant needs exactly n matrices of size n; got " +
                      std::to_string(t.mats.size()) + " of size " + std::to_string(n));
}

RingMatrix column_mix(const MatrixTuple& t, const std::vector<int>& alpha) {
  validate_tuple(t, true);
  int n = t.n();
  std::vector<bool> seen(n, false);
  if (static_cast<int>(alpha.size()) != n) throw ConfigError("column_mix: alpha has wrong length");
  for (int a : alpha) {
    if (a < 0 || a >= n || seen[a]) throw ConfigError("column_mix: alpha is not a permutation");
    seen[a] = true;
  }
  RingMatrix r(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) r(i, j) = t.mats[alpha[j]](i, j);
  return r;
}

PolyElem mixed_discriminant(const MatrixTuple& t) {
  validate_tuple(t, true);
  int n = t.n();
  PolyElem sum;  // accumulates n! * D
  for_each_permutation(n, [&](const std::vector<int>& alpha) {
    sum += det(column_mix(t, alpha));
  });
  return sum.scaled(Rational(1, factorial(static_cast<unsigned>(n))));
}

std::vector<VarId> fresh_x_vars(const std::vector<std::string>& names,
                                const std::vector<const RingMatrix*>& mats) {
  std::set<VarId> used;
  for (const RingMatrix* m : mats)
    for (int i = 0; i < m->n(); ++i)
      for (int j = 0; j < m->n(); ++j)
        for (const auto& t : (*m)(i, j).terms())
          for (const auto& [v, e] : t.m.factors()) used.insert(v);
  std::vector<VarId> ids;
  ids.reserve(names.size());
  for (const auto& name : names) {
    if (Interner::instance().contains(name) && used.count(Interner::instance().id_of(name)))
      throw ConfigError("indeterminate-name collision: " + name +
                        " already used by a matrix entry");
    ids.push_back(var(name));
  }
  return ids;
}

PolyElem mixed_char_poly(const MatrixTuple& t) {
  validate_tuple(t, true);
  int n = t.n();
  std::vector<std::string> names;
  std::vector<const RingMatrix*> ptrs;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (const auto& m : t.mats) ptrs.push_back(&m);
  std::vector<VarId> xs = fresh_x_vars(names, ptrs);
  MatrixTuple shifted;
  for (int i = 0; i < n; ++i)
    shifted.mats.push_back(RingMatrix::identity(n).scaled(PolyElem::variable(xs[i])) - t.mats[i]);
  return mixed_discriminant(shifted);
}

}  // namespace chv
