#include "chv/theorems.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <utility>

#include "chv/decorated.hpp"
#include "chv/decorated2.hpp"
#include "chv/error.hpp"
#include "chv/gen.hpp"
#include "chv/interner.hpp"
#include "chv/mixed.hpp"
#include "chv/rng.hpp"

namespace chv {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

void check_square_list(const std::vector<RingMatrix>& A, const char* what) {
  if (A.empty()) throw ConfigError(std::string(what) + ": at least one matrix required");
  int n = A[0].n();
  if (n < 1) throw ConfigError(std::string(what) + ": matrices must be at least 1 x 1");
  for (const auto& m : A)
    if (m.n() != n) throw ConfigError(std::string(what) + ": matrices must share a dimension");
}

void check_grid_shape(const std::vector<std::vector<RingMatrix>>& A, const char* what) {
  int n = static_cast<int>(A.size());
  if (n < 1) throw ConfigError(std::string(what) + ": at least one row required");
  std::size_t k = A[0].size();
  if (k < 1) throw ConfigError(std::string(what) + ": at least one matrix per row required");
  for (const auto& row : A) {
    if (row.size() != k) throw ConfigError(std::string(what) + ": ragged rows");
    for (const auto& m : row)
      if (m.n() != n) throw ConfigError(std::string(what) + ": matrices must be n x n");
  }
}

void check_constraint_shape(const ConstraintFamily& f) {
  if (f.k < 1 || static_cast<int>(f.A.size()) != f.k || static_cast<int>(f.B.size()) != f.k)
    throw ConfigError("family must carry k matrices on each side");
  for (const auto& m : f.A)
    if (m.n() != f.n) throw ConfigError("family matrices must be n x n");
  for (const auto& m : f.B)
    if (m.n() != f.n) throw ConfigError("family matrices must be n x n");
}

void check_mixed_shape(const MixedConstraintFamily& f) {
  if (f.n < 1 || f.k < 1 || static_cast<int>(f.A.size()) != f.n ||
      static_cast<int>(f.B.size()) != f.n)
    throw ConfigError("mixed family must carry n rows");
  for (const auto* grid : {&f.A, &f.B})
    for (const auto& row : *grid) {
      if (static_cast<int>(row.size()) != f.k)
        throw ConfigError("mixed family rows must carry k matrices");
      for (const auto& m : row)
        if (m.n() != f.n) throw ConfigError("mixed family matrices must be n x n");
    }
}

nlohmann::ordered_json violation_witness(const HypothesisIssue& issue) {
  return {{"kind", issue.kind}, {"where", issue.where}};
}

bool first_nonzero_entry(const RingMatrix& m, nlohmann::ordered_json& witness) {
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      if (!m(i, j).is_zero()) {
        witness = {{"entry", {i + 1, j + 1}}, {"value", m(i, j).str()}};
        return true;
      }
  return false;
}

std::vector<std::string> indexed_names(const char* stem, int count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (int i = 1; i <= count; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

std::vector<RingMatrix> flatten_grid(const std::vector<std::vector<RingMatrix>>& g) {
  std::vector<RingMatrix> flat;
  for (const auto& row : g) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

// Cross-row commutation only (the hypothesis actually needed by the hatted
// entry identity); returns the first offending pair.
std::optional<HypothesisIssue> find_cross_row_noncommuting(
    const std::vector<std::vector<RingMatrix>>& B) {
  int n = static_cast<int>(B.size());
  int k = static_cast<int>(B[0].size());
  for (int i = 0; i < n; ++i)
    for (int i2 = i + 1; i2 < n; ++i2)
      for (int j = 0; j < k; ++j)
        for (int j2 = 0; j2 < k; ++j2)
          if (B[i][j] * B[i2][j2] != B[i2][j2] * B[i][j])
            return HypothesisIssue{
                "commutation", "B[" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                   "]B[" + std::to_string(i2 + 1) + "," +
                                   std::to_string(j2 + 1) + "] != the reverse product"};
  return std::nullopt;
}

RingMatrix det_B_minor_core(const ConstraintFamily& f,
                            const std::vector<std::vector<RingMatrix>>& MB, int i, int j) {
  int n = f.n;
  RingMatrix acc(n);
  for_each_permutation(n, [&](const std::vector<int>& sigma) {
    if (sigma[i] != j) return;
    RingMatrix prod = RingMatrix::identity(n);
    for (int r = 0; r < n; ++r)
      if (r != i) prod = prod * MB[r][sigma[r]];
    acc = acc + prod.scaled(PolyElem(permutation_sign(sigma)));
  });
  return ((i + j) % 2 == 0) ? acc : -acc;
}

std::vector<std::vector<RingMatrix>> build_MB(const ConstraintFamily& f) {
  std::vector<std::vector<RingMatrix>> MB(f.n, std::vector<RingMatrix>(f.n));
  for (int r = 0; r < f.n; ++r)
    for (int c = 0; c < f.n; ++c) {
      RingMatrix acc(f.n);
      for (int l = 0; l < f.k; ++l) acc = acc + f.B[l].scaled(f.A[l](r, c));
      MB[r][c] = std::move(acc);
    }
  return MB;
}

std::string formal_label(int v) { return v == 0 ? "r" : "s"; }
std::string formal_alpha(int v) { return v == 0 ? "a1" : "a2"; }

std::string cell(int r, int c) {
  return "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
}

}  // namespace

XPolynomial multivar_char_poly(const std::vector<RingMatrix>& A) {
  check_square_list(A, "multivar_char_poly");
  int n = A[0].n();
  int k = static_cast<int>(A.size());
  std::vector<const RingMatrix*> ptrs;
  for (const auto& m : A) ptrs.push_back(&m);
  std::vector<VarId> xv = fresh_x_vars(indexed_names("x", k), ptrs);
  RingMatrix mix(n);
  for (int i = 0; i < k; ++i) mix = mix + A[i].scaled(PolyElem::variable(xv[i]));
  return collect(det(mix), xv);
}

XPolynomial mixed_multivar_char_poly(const std::vector<std::vector<RingMatrix>>& A) {
  check_grid_shape(A, "mixed_multivar_char_poly");
  int n = static_cast<int>(A.size());
  int k = static_cast<int>(A[0].size());
  std::vector<std::string> names;
  std::vector<const RingMatrix*> ptrs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      names.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      ptrs.push_back(&A[i][j]);
    }
  std::vector<VarId> xv = fresh_x_vars(names, ptrs);
  MatrixTuple t;
  for (int i = 0; i < n; ++i) {
    RingMatrix row(n);
    for (int j = 0; j < k; ++j) row = row + A[i][j].scaled(PolyElem::variable(xv[i * k + j]));
    t.mats.push_back(std::move(row));
  }
  return collect(mixed_discriminant(t), xv);
}

VerificationReport verify_phillips(const ConstraintFamily& f) {
  auto t0 = Clock::now();
  check_constraint_shape(f);
  VerificationReport r;
  r.theorem = "phillips";
  r.params = {{"n", f.n}, {"k", f.k}};
  if (auto issue = check_family(f)) {
    r.status = "hypothesis_violation";
    r.witness = violation_witness(*issue);
    r.elapsed_ms = ms_since(t0);
    return r;
  }
  XPolynomial p = multivar_char_poly(f.A);
  RingMatrix res = substitute_ascending(p, f.B);
  r.counts = {{"x_monomials", p.terms.size()}};
  if (first_nonzero_entry(res, r.witness)) r.status = "fail";
  r.elapsed_ms = ms_since(t0);
  return r;
}

VerificationReport verify_classic_ch(const RingMatrix& M) {
  auto t0 = Clock::now();
  if (M.n() < 1) throw ConfigError("matrix must be at least 1 x 1");
  VerificationReport r;
  r.theorem = "ch";
  r.params = {{"n", M.n()}};
  // Bivariate route: the (-I, M | M, I) family through the general theorem.
  ConstraintFamily f = specialize_CH(M);
  XPolynomial p = multivar_char_poly(f.A);
  RingMatrix via_family = substitute_ascending(p, f.B);
  // Independent univariate route: q(x) = det(xI - M) evaluated at M by
  // Horner's scheme.
  std::vector<VarId> xv = fresh_x_vars(indexed_names("x", 1), {&M});
  RingMatrix xIminusM =
      RingMatrix::identity(M.n()).scaled(PolyElem::variable(xv[0])) - M;
  XPolynomial q = collect(det(xIminusM), xv);
  std::vector<PolyElem> coef_by_degree(static_cast<std::size_t>(M.n()) + 1);
  for (const auto& term : q.terms) coef_by_degree.at(term.exps[0]) = term.coef;
  RingMatrix horner(M.n());
  for (int d = M.n(); d >= 0; --d)
    horner = horner * M + RingMatrix::identity(M.n()).scaled(coef_by_degree[d]);
  r.counts = {{"x_monomials", p.terms.size()}, {"degree", M.n()}};
  if (first_nonzero_entry(via_family, r.witness)) {
    r.status = "fail";
    r.witness["route"] = "bivariate";
  } else if (first_nonzero_entry(horner, r.witness)) {
    r.status = "fail";
    r.witness["route"] = "horner";
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

VerificationReport verify_cor_2matrices(const RingMatrix& A, const RingMatrix& B) {
  auto t0 = Clock::now();
  if (A.n() != B.n() || A.n() < 1) throw ConfigError("matrices must share a dimension >= 1");
  VerificationReport r;
  r.theorem = "cor12";
  r.params = {{"n", A.n()}};
  if (A * B != B * A) {
    r.status = "hypothesis_violation";
    r.witness = {{"kind", "commutation"}, {"where", "AB != BA"}};
    r.elapsed_ms = ms_since(t0);
    return r;
  }
  ConstraintFamily f;
  f.n = A.n();
  f.k = 2;
  f.A = {A, -B};
  f.B = {B, A};
  XPolynomial p = multivar_char_poly(f.A);
  RingMatrix res = substitute_ascending(p, f.B);
  r.counts = {{"x_monomials", p.terms.size()}};
  if (first_nonzero_entry(res, r.witness)) r.status = "fail";
  r.elapsed_ms = ms_since(t0);
  return r;
}

VerificationReport verify_bapat_roy(const std::vector<RingMatrix>& A,
                                    std::uint64_t order_seed) {
  auto t0 = Clock::now();
  check_square_list(A, "verify_bapat_roy");
  int n = A[0].n();
  if (static_cast<int>(A.size()) != n)
    throw ConfigError("verify_bapat_roy: needs n matrices of dimension n");
  VerificationReport r;
  r.theorem = "bapat-roy";
  std::vector<const RingMatrix*> ptrs;
  for (const auto& m : A) ptrs.push_back(&m);
  std::vector<VarId> xv = fresh_x_vars(indexed_names("x", n), ptrs);
  MatrixTuple t;
  for (int i = 0; i < n; ++i)
    t.mats.push_back(RingMatrix::identity(n).scaled(PolyElem::variable(xv[i])) - A[i]);
  XPolynomial f = collect(mixed_discriminant(t), xv);
  RingMatrix ascending = substitute_ascending(f, A);

  // Data: one random alternative ordering and the symmetrized average.
  Xoshiro256ss rng(order_seed);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i >= 1; --i) {
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(order[i], order[j]);
  }
  RingMatrix alternative = substitute_with_order(f, A, order);
  RingMatrix symmetrized = substitute_symmetrized(f, A);

  nlohmann::ordered_json order_json = nlohmann::ordered_json::array();
  for (int v : order) order_json.push_back(v + 1);
  r.params = {{"n", n}, {"alt_order", order_json}};
  r.counts = {{"x_monomials", f.terms.size()},
              {"alt_order_zero", alternative.is_zero() ? 1 : 0},
              {"alt_matches_ascending", alternative == ascending ? 1 : 0},
              {"symmetrized_zero", symmetrized.is_zero() ? 1 : 0}};
  if (first_nonzero_entry(ascending, r.witness)) r.status = "fail";
  r.elapsed_ms = ms_since(t0);
  return r;
}

VerificationReport verify_mixed_theorem(const MixedConstraintFamily& f) {
  auto t0 = Clock::now();
  check_mixed_shape(f);
  VerificationReport r;
  r.theorem = "mixed";
  r.params = {{"n", f.n}, {"k", f.k}};
  if (auto issue = check_family(f)) {
    r.status = "hypothesis_violation";
    r.witness = violation_witness(*issue);
    r.elapsed_ms = ms_since(t0);
    return r;
  }
  XPolynomial phat = mixed_multivar_char_poly(f.A);
  RingMatrix res = substitute_ascending(phat, flatten_grid(f.B));
  r.counts = {{"x_monomials", phat.terms.size()}};
  if (first_nonzero_entry(res, r.witness)) r.status = "fail";
  r.elapsed_ms = ms_since(t0);
  return r;
}

PolyElem lemma_G_sum(const ConstraintFamily& f, int b, int e) {
  check_constraint_shape(f);
  require_valid(f);
  PolyElem sum;
  enumerate_G(f.n, f.k, b, e, [&](const Pathmap& g) { sum += swgt_pathmap(g, f.A, f.B); });
  return sum;
}

PolyElem lemma_H_sum(const ConstraintFamily& f, int b, int e) {
  check_constraint_shape(f);
  require_valid(f);
  PolyElem sum;
  enumerate_H(f.n, f.k, b, e, [&](const Pathmap& g) { sum += swgt_pathmap(g, f.A, f.B); });
  return sum;
}

VerificationReport pathmutation_entry_identity(const ConstraintFamily& f, int b, int e) {
  auto t0 = Clock::now();
  check_constraint_shape(f);
  if (b < 0 || b >= f.n || e < 0 || e >= f.n) throw ConfigError("entry indices out of range");
  VerificationReport r;
  r.theorem = "pathmutation-entry";
  r.params = {{"n", f.n}, {"k", f.k}, {"b", b + 1}, {"e", e + 1}};
  if (auto pair = find_noncommuting(f.B)) {
    r.status = "hypothesis_violation";
    r.witness = {{"kind", "commutation"},
                 {"where", "B[" + std::to_string(pair->first + 1) + "]B[" +
                               std::to_string(pair->second + 1) + "] != the reverse product"}};
    r.elapsed_ms = ms_since(t0);
    return r;
  }
  PolyElem lhs;
  std::uint64_t count = 0;
  enumerate_pathmutations(f.n, f.k, b, e, [&](const Pathmutation& pm) {
    lhs += swgt_pathmutation(pm, f.A, f.B);
    ++count;
  });
  PolyElem rhs = substitute_ascending(multivar_char_poly(f.A), f.B)(b, e);
  r.counts = {{"pathmutations", count}};
  if (lhs != rhs) {
    r.status = "fail";
    r.witness = {{"b", b + 1}, {"e", e + 1}, {"lhs", lhs.str()}, {"rhs", rhs.str()}};
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

PolyElem lemma_G2_sum(const MixedConstraintFamily& f, int b, int e) {
  check_mixed_shape(f);
  require_valid(f);
  PolyElem sum;
  enumerate_G2(f.n, f.k, b, e, [&](const Pathmap2& g) { sum += swgt_pathmap2(g, f.A, f.B); });
  return sum;
}

PolyElem lemma_H2_sum(const MixedConstraintFamily& f, int b, int e) {
  check_mixed_shape(f);
  require_valid(f);
  PolyElem sum;
  enumerate_H2(f.n, f.k, b, e, [&](const Pathmap2& g) { sum += swgt_pathmap2(g, f.A, f.B); });
  return sum;
}

VerificationReport pathmutation2_entry_identity(const MixedConstraintFamily& f, int b, int e) {
  auto t0 = Clock::now();
  check_mixed_shape(f);
  if (b < 0 || b >= f.n || e < 0 || e >= f.n) throw ConfigError("entry indices out of range");
  VerificationReport r;
  r.theorem = "pathmutation2-entry";
  r.params = {{"n", f.n}, {"k", f.k}, {"b", b + 1}, {"e", e + 1}};
  if (auto issue = find_cross_row_noncommuting(f.B)) {
    r.status = "hypothesis_violation";
    r.witness = violation_witness(*issue);
    r.elapsed_ms = ms_since(t0);
    return r;
  }
  PolyElem lhs;
  std::uint64_t count = 0;
  enumerate_pathmutations2(f.n, f.k, b, e, [&](const Pathmutation2& pm) {
    lhs += swgt_pathmutation2(pm, f.A, f.B);
    ++count;
  });
  PolyElem rhs = substitute_ascending(mixed_multivar_char_poly(f.A), flatten_grid(f.B))(b, e);
  PolyElem scaled_rhs = PolyElem(Rational(factorial(static_cast<unsigned>(f.n)))) * rhs;
  r.counts = {{"pathmutations2", count}, {"matches_unscaled_form", lhs == rhs ? 1 : 0}};
  if (lhs != scaled_rhs) {
    r.status = "fail";
    r.witness = {{"b", b + 1},
                 {"e", e + 1},
                 {"lhs", lhs.str()},
                 {"rhs", scaled_rhs.str()},
                 {"rhs_is", "n! * phat(B) entry"}};
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

RingMatrix det_B_minor(const ConstraintFamily& f, int i, int j) {
  check_constraint_shape(f);
  require_valid(f);
  if (i < 0 || i >= f.n || j < 0 || j >= f.n) throw ConfigError("minor indices out of range");
  return det_B_minor_core(f, build_MB(f), i, j);
}

VerificationReport phillips_laplace_check(const ConstraintFamily& f, int b, int e) {
  auto t0 = Clock::now();
  check_constraint_shape(f);
  if (b < 0 || b >= f.n || e < 0 || e >= f.n) throw ConfigError("entry indices out of range");
  VerificationReport r;
  r.theorem = "laplace";
  r.params = {{"n", f.n}, {"k", f.k}, {"b", b + 1}, {"e", e + 1}};
  if (auto issue = check_family(f)) {
    r.status = "hypothesis_violation";
    r.witness = violation_witness(*issue);
    r.elapsed_ms = ms_since(t0);
    return r;
  }
  auto MB = build_MB(f);
  RingMatrix total(f.n);
  for (int s = 0; s < f.n; ++s) {
    RingMatrix term = MB[s][b] * det_B_minor_core(f, MB, s, b);
    total = total + ((s + b) % 2 == 0 ? term : -term);
  }
  r.counts = {{"minors", f.n}};
  if (!total(b, e).is_zero()) {
    r.status = "fail";
    r.witness = {{"b", b + 1}, {"e", e + 1}, {"value", total(b, e).str()}};
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

namespace {

// Shared core of the integer and symbolic lemma-suite drivers: checks the
// three identities over all (b,e) on one family and fills witness/status.
// When require_constraint is false the G-sum (which needs the constraint
// hypothesis sum_i A_i B_i = 0) is skipped.
bool run_lemma_identities(const ConstraintFamily& f, bool require_constraint,
                          const std::string& family_tag, VerificationReport& r) {
  RingMatrix pB = substitute_ascending(multivar_char_poly(f.A), f.B);
  for (int b = 0; b < f.n; ++b)
    for (int e = 0; e < f.n; ++e) {
      PolyElem gsum, hsum, asum;
      if (require_constraint)
        enumerate_G(f.n, f.k, b, e,
                    [&](const Pathmap& g) { gsum += swgt_pathmap(g, f.A, f.B); });
      enumerate_H(f.n, f.k, b, e, [&](const Pathmap& g) { hsum += swgt_pathmap(g, f.A, f.B); });
      enumerate_pathmutations(f.n, f.k, b, e, [&](const Pathmutation& pm) {
        asum += swgt_pathmutation(pm, f.A, f.B);
      });
      auto fail = [&](const char* identity, const PolyElem& lhs, const PolyElem& rhs) {
        r.status = "fail";
        r.witness = {{"family", family_tag}, {"identity", identity},    {"b", b + 1},
                     {"e", e + 1},           {"lhs", lhs.str()},        {"rhs", rhs.str()}};
      };
      if (require_constraint && !gsum.is_zero()) {
        fail("G_sum", gsum, PolyElem());
        return false;
      }
      if (!hsum.is_zero()) {
        fail("H_sum", hsum, PolyElem());
        return false;
      }
      if (asum != pB(b, e)) {
        fail("A_sum", asum, pB(b, e));
        return false;
      }
    }
  return true;
}

bool run_lemma2_identities(const MixedConstraintFamily& f, bool require_constraint,
                           const std::string& family_tag, VerificationReport& r) {
  PolyElem scale{Rational(factorial(static_cast<unsigned>(f.n)))};
  RingMatrix phatB = substitute_ascending(mixed_multivar_char_poly(f.A), flatten_grid(f.B));
  for (int b = 0; b < f.n; ++b)
    for (int e = 0; e < f.n; ++e) {
      PolyElem gsum, hsum, asum;
      if (require_constraint)
        enumerate_G2(f.n, f.k, b, e,
                     [&](const Pathmap2& g) { gsum += swgt_pathmap2(g, f.A, f.B); });
      enumerate_H2(f.n, f.k, b, e,
                   [&](const Pathmap2& g) { hsum += swgt_pathmap2(g, f.A, f.B); });
      enumerate_pathmutations2(f.n, f.k, b, e, [&](const Pathmutation2& pm) {
        asum += swgt_pathmutation2(pm, f.A, f.B);
      });
      auto fail = [&](const char* identity, const PolyElem& lhs, const PolyElem& rhs) {
        r.status = "fail";
        r.witness = {{"family", family_tag}, {"identity", identity},    {"b", b + 1},
                     {"e", e + 1},           {"lhs", lhs.str()},        {"rhs", rhs.str()}};
      };
      if (require_constraint && !gsum.is_zero()) {
        fail("G2_sum", gsum, PolyElem());
        return false;
      }
      if (!hsum.is_zero()) {
        fail("H2_sum", hsum, PolyElem());
        return false;
      }
      PolyElem rhs = scale * phatB(b, e);
      if (asum != rhs) {
        fail("A2_sum", asum, rhs);
        return false;
      }
    }
  return true;
}

void attach_lemma_counts(VerificationReport& r, int n, int k, bool hatted) {
  auto u64 = [](const Int& v) { return v.convert_to<std::uint64_t>(); };
  if (hatted) {
    r.counts = {{"pairs", n * n},
                {"pathmutations2_per_pair", u64(count_pathmutations2(n, k))},
                {"H2_per_pair", u64(count_H2(n, k))},
                {"G2_per_pair", u64(count_G2(n, k))}};
  } else {
    r.counts = {{"pairs", n * n},
                {"pathmutations_per_pair", u64(count_pathmutations(n, k))},
                {"H_per_pair", u64(count_H(n, k))},
                {"G_per_pair", u64(count_G(n, k))}};
  }
}

}  // namespace

VerificationReport verify_lemma_suite(const ConstraintFamily& f) {
  auto t0 = Clock::now();
  check_constraint_shape(f);
  VerificationReport r;
  r.theorem = "lemmas";
  r.params = {{"n", f.n}, {"k", f.k}};
  attach_lemma_counts(r, f.n, f.k, false);
  if (auto issue = check_family(f)) {
    r.status = "hypothesis_violation";
    r.witness = violation_witness(*issue);
  } else {
    run_lemma_identities(f, true, "input", r);
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

VerificationReport verify_lemmas_symbolic(int n, int k) {
  auto t0 = Clock::now();
  VerificationReport r;
  r.theorem = "lemmas";
  r.params = {{"n", n}, {"k", k}, {"symbolic", true}};
  attach_lemma_counts(r, n, k, false);

  FamilySpec diag;
  diag.strategy = "diagonal-generic";
  diag.n = n;
  diag.k = k;
  std::vector<RingMatrix> B = gen_commuting(diag);

  // Constrained family with fully generic symbolic C: all three identities.
  ConstraintFamily constrained = constrained_family_symbolic_C(B);
  bool ok = run_lemma_identities(constrained, true, "constrained-symbolic-C", r);

  // Fully generic free A over the same commuting diagonal B: the H-sum and
  // the entry identity hold without the constraint equation.
  if (ok) {
    ConstraintFamily free_a;
    free_a.n = n;
    free_a.k = k;
    free_a.B = B;
    for (int i = 1; i <= k; ++i) {
      RingMatrix a(n);
      for (int rr = 1; rr <= n; ++rr)
        for (int cc = 1; cc <= n; ++cc)
          a(rr - 1, cc - 1) = PolyElem::variable(
              "a" + std::to_string(i) + "_" + std::to_string(rr) + std::to_string(cc));
      free_a.A.push_back(std::move(a));
    }
    run_lemma_identities(free_a, false, "free-A-diagonal-B", r);
  }

  if (n == 2 && k == 2) {
    auto fams = term_families_unhatted();
    r.params["term_families"] = fams;
    r.counts["term_families"] = fams.size();
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

VerificationReport verify_lemma2_suite(const MixedConstraintFamily& f) {
  auto t0 = Clock::now();
  check_mixed_shape(f);
  VerificationReport r;
  r.theorem = "lemmas2";
  r.params = {{"n", f.n}, {"k", f.k}};
  attach_lemma_counts(r, f.n, f.k, true);
  if (auto issue = check_family(f)) {
    r.status = "hypothesis_violation";
    r.witness = violation_witness(*issue);
  } else {
    run_lemma2_identities(f, true, "input", r);
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

VerificationReport verify_lemmas2_symbolic(int n, int k) {
  auto t0 = Clock::now();
  VerificationReport r;
  r.theorem = "lemmas2";
  r.params = {{"n", n}, {"k", k}, {"symbolic", true}};
  attach_lemma_counts(r, n, k, true);

  MixedConstraintFamily constrained = mixed_family_symbolic_C(n, k);
  bool ok = run_lemma2_identities(constrained, true, "constrained-symbolic-C", r);

  if (ok) {
    MixedConstraintFamily free_a;
    free_a.n = n;
    free_a.k = k;
    free_a.B = constrained.B;  // the diagonal symbolic pool
    for (int i = 0; i < n; ++i) {
      std::vector<RingMatrix> row;
      for (int j = 0; j < k; ++j) {
        RingMatrix a(n);
        for (int rr = 1; rr <= n; ++rr)
          for (int cc = 1; cc <= n; ++cc)
            a(rr - 1, cc - 1) = PolyElem::variable("a" + std::to_string(i + 1) +
                                                   std::to_string(j + 1) + "_" +
                                                   std::to_string(rr) + std::to_string(cc));
        row.push_back(std::move(a));
      }
      free_a.A.push_back(std::move(row));
    }
    run_lemma2_identities(free_a, false, "free-A-diagonal-B", r);
  }

  if (n == 2 && k == 2) {
    auto fams = term_families_hatted();
    r.params["term_families"] = fams;
    r.counts["term_families"] = fams.size();
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

VerificationReport verify_laplace_suite(const ConstraintFamily& f) {
  auto t0 = Clock::now();
  check_constraint_shape(f);
  VerificationReport r;
  r.theorem = "laplace";
  r.params = {{"n", f.n}, {"k", f.k}};
  r.counts = {{"pairs", f.n * f.n}, {"minors", f.n * f.n}};
  if (auto issue = check_family(f)) {
    r.status = "hypothesis_violation";
    r.witness = violation_witness(*issue);
    r.elapsed_ms = ms_since(t0);
    return r;
  }
  auto MB = build_MB(f);
  for (int b = 0; b < f.n && r.passed(); ++b) {
    RingMatrix total(f.n);
    for (int s = 0; s < f.n; ++s) {
      RingMatrix term = MB[s][b] * det_B_minor_core(f, MB, s, b);
      total = total + ((s + b) % 2 == 0 ? term : -term);
    }
    for (int e = 0; e < f.n; ++e)
      if (!total(b, e).is_zero()) {
        r.status = "fail";
        r.witness = {{"b", b + 1}, {"e", e + 1}, {"value", total(b, e).str()}};
        break;
      }
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

std::vector<std::string> term_families_unhatted() {
  std::vector<std::string> out;
  std::map<std::string, bool> seen;
  enumerate_G(2, 2, 0, 1, [&](const Pathmap& g) {
    std::string key = to_json(Pathmap{DecoratedMap{g.dmap.n, g.dmap.k, g.dmap.sigma,
                                                   g.dmap.tau, {0, 0}},
                                      DecoratedPath{g.path.n, g.path.k, g.path.vertices,
                                                    {0, 0}}})
                          .dump();
    auto [pm, j] = phi_inv(g);
    if (pm.perm.labels != std::vector<int>{0, 1}) return;
    if (seen.count(key)) return;
    seen[key] = true;
    std::string s(sign_pathmap(g) > 0 ? "+" : "-");
    for (int i = 0; i < 2; ++i)
      s += "A[" + formal_label(g.dmap.labels[i]) + "]" + cell(g.dmap.sigma[i], g.dmap.tau[i]) +
           "*";
    for (int i = 0; i < 2; ++i) {
      s += "B[" + formal_label(g.path.labels[i]) + "]" +
           cell(g.path.vertices[i], g.path.vertices[i + 1]);
      if (i == 0) s += "*";
    }
    out.push_back(std::move(s));
  });
  if (out.size() != 8) throw ConfigError("term-family extraction expected 8 families");
  return out;
}

std::vector<std::string> term_families_hatted() {
  std::vector<std::string> out;
  std::map<std::string, bool> seen;
  enumerate_G2(2, 2, 0, 1, [&](const Pathmap2& g) {
    std::string key =
        to_json(DecoratedMap{g.dmap.n, g.dmap.k, g.dmap.sigma, g.dmap.tau, {0, 0}}).dump() +
        to_json(DecoratedPath{g.path.n, g.path.k, g.path.vertices, {0, 0}}).dump();
    auto [pm, j] = hat_phi_inv(g);
    if (pm.perm.labels != std::vector<int>{0, 1}) return;
    if (pm.perm.alpha != std::vector<int>{0, 1}) return;
    if (seen.count(key)) return;
    seen[key] = true;
    std::string s(sign_pathmap2(g) > 0 ? "+" : "-");
    for (int i = 0; i < 2; ++i)
      s += "A[" + formal_alpha(g.dmap.alpha[i]) + "," + formal_label(g.dmap.labels[i]) + "]" +
           cell(g.dmap.sigma[i], g.dmap.tau[i]) + "*";
    for (int i = 0; i < 2; ++i) {
      s += "B[" + formal_alpha(g.path.alpha[i]) + "," + formal_label(g.path.labels[i]) + "]" +
           cell(g.path.vertices[i], g.path.vertices[i + 1]);
      if (i == 0) s += "*";
    }
    out.push_back(std::move(s));
  });
  if (out.size() != 8) throw ConfigError("term-family extraction expected 8 families");
  return out;
}

}  // namespace chv
