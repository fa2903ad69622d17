// Theorem-level verifiers: characteristic polynomials, substitution orders,
// the vanishing theorems, lemma sums, and the det_B Laplace machinery. Every
// derived quantity is checked against an oracle built here from first
// principles (permutation expansions, column splicing, adjugates).
#include <array>
#include <optional>
#include <utility>

#include "test_util.hpp"

using namespace chv;

namespace {

RingMatrix mpow(const RingMatrix& m, std::uint32_t d) {
  RingMatrix r = RingMatrix::identity(m.n());
  for (std::uint32_t i = 0; i < d; ++i) r = r * m;
  return r;
}

FamilySpec spec_of(const std::string& strategy, int n, int k, std::uint64_t seed) {
  FamilySpec s;
  s.strategy = strategy;
  s.n = n;
  s.k = k;
  s.seed = seed;
  return s;
}

ConstraintFamily int_family(int n, int k, std::uint64_t seed) {
  return gen_constrained(gen_commuting(spec_of("powers-of-one", n, k, seed)), seed);
}

// 2x2 mixed discriminant by column splicing: the average of the two spliced
// determinants.
PolyElem D2(const RingMatrix& X, const RingMatrix& Y) {
  PolyElem d_id = X(0, 0) * Y(1, 1) - Y(0, 1) * X(1, 0);
  PolyElem d_sw = Y(0, 0) * X(1, 1) - X(0, 1) * Y(1, 0);
  return (d_id + d_sw).scaled(Rational(1, 2));
}

std::optional<std::pair<std::array<int, 2>, std::string>> first_nonzero(const RingMatrix& m) {
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      if (!m(i, j).is_zero())
        return std::make_pair(std::array<int, 2>{i + 1, j + 1}, m(i, j).str());
  return std::nullopt;
}

}  // namespace

TEST_CASE_FIXTURE(Fresh, "multivar_char_poly structure") {
  RingMatrix M = imat({{2, 1, 0}, {0, 1, 3}, {1, 0, 1}});
  XPolynomial p1 = multivar_char_poly({M});
  REQUIRE(p1.xvars.size() == 1);
  REQUIRE(p1.terms.size() == 1);
  CHECK(p1.terms[0].exps == std::vector<std::uint32_t>{3});
  CHECK(p1.terms[0].coef == det_expansion(M));

  XPolynomial pd = multivar_char_poly({RingMatrix::identity(2), mat({{"a", "0"}, {"0", "b"}})});
  CHECK(xeq(pd, collect(P("x1^2 + (a+b)*x1*x2 + a*b*x2^2"), pd.xvars)));

  // Fully generic 2x2 pencil against a hand-rolled permutation expansion.
  auto A = gmats(2, 2, "a");
  XPolynomial p = multivar_char_poly(A);
  RingMatrix Mx = A[0].scaled(P("x1")) + A[1].scaled(P("x2"));
  PolyElem oracle;
  for_each_permutation(2, [&](const std::vector<int>& s) {
    PolyElem prod(permutation_sign(s));
    for (int r = 0; r < 2; ++r) prod *= Mx(r, s[r]);
    oracle += prod;
  });
  CHECK(xeq(p, collect(oracle, p.xvars)));
  CHECK(is_homogeneous(p, 2));

  ConstraintFamily f3 = int_family(3, 2, 4);
  CHECK(is_homogeneous(multivar_char_poly(f3.A), 3));

  CHECK_THROWS_AS(multivar_char_poly({RingMatrix::identity(2), RingMatrix::identity(3)}),
                  ConfigError);
  CHECK_THROWS_AS(multivar_char_poly({mat({{"x1"}})}), ConfigError);
}

TEST_CASE_FIXTURE(Fresh, "mixed_multivar_char_poly carries one variable per row") {
  std::vector<std::vector<RingMatrix>> A1 = {{mat({{"a"}}), mat({{"b"}})}};
  XPolynomial ph1 = mixed_multivar_char_poly(A1);
  REQUIRE(ph1.xvars.size() == 2);
  CHECK(Interner::instance().name_of(ph1.xvars[0]) == "x1_1");
  CHECK(Interner::instance().name_of(ph1.xvars[1]) == "x1_2");
  CHECK(xeq(ph1, collect(P("a*x1_1 + b*x1_2"), ph1.xvars)));

  MixedConstraintFamily mf = gen_mixed_constrained(spec_of("powers-of-one", 2, 2, 6));
  XPolynomial ph = mixed_multivar_char_poly(mf.A);
  REQUIRE(ph.xvars.size() == 4);
  CHECK(Interner::instance().name_of(ph.xvars[2]) == "x2_1");
  CHECK(is_multilinear(ph));
  CHECK(is_homogeneous(ph, 2));
  for (const auto& t : ph.terms)
    for (int i = 0; i < 2; ++i)
      CHECK(t.exps[static_cast<std::size_t>(2 * i)] + t.exps[static_cast<std::size_t>(2 * i + 1)] == 1);
}

TEST_CASE_FIXTURE(Fresh, "substitution orders and hypotheses") {
  RingMatrix M = imat({{1, 2}, {3, -1}});
  XPolynomial px = collect(P("x1"), {var("x1")});
  CHECK(substitute_ascending(px, {M}) == M);

  XPolynomial pxy = collect(P("x1*x2"), {var("x1"), var("x2")});
  CHECK(substitute_commuting(pxy, {M, M * M}) == mpow(M, 3));

  RingMatrix E12 = imat({{0, 1}, {0, 0}}), E21 = imat({{0, 0}, {1, 0}});
  CHECK_THROWS_AS(substitute_commuting(pxy, {E12, E21}), HypothesisViolation);
  CHECK(substitute_with_order(pxy, {E12, E21}, {1, 0}) == E21 * E12);
  // Symmetrized product of E12, E21 is (E11 + E22)/2.
  CHECK(substitute_symmetrized(pxy, {E12, E21}) ==
        RingMatrix::identity(2).scaled(P("1/2")));

  ConstraintFamily f = int_family(3, 3, 7);
  XPolynomial p = multivar_char_poly(f.A);
  CHECK(substitute_with_order(p, f.B, {2, 0, 1}) == substitute_ascending(p, f.B));
  CHECK(substitute_with_order(p, f.B, {1, 2, 0}) == substitute_commuting(p, f.B));
}

TEST_CASE_FIXTURE(Fresh, "classic CH against a univariate power-sum oracle") {
  RingMatrix M = imat({{1, 2, 0}, {0, 1, 1}, {2, 0, 1}});
  // det(I x1 - M x2): substituting (M, I) ascending must equal the hand
  // power sum over collected coefficients, which CH then makes zero.
  XPolynomial q = multivar_char_poly({RingMatrix::identity(3), -M});
  RingMatrix O(3);
  for (const auto& t : q.terms) O = O + mpow(M, t.exps[0]).scaled(t.coef);
  CHECK(substitute_ascending(q, {M, RingMatrix::identity(3)}) == O);
  CHECK(O.is_zero());

  for (int n = 2; n <= 4; ++n)
    for (std::uint64_t s : {1, 2}) {
      auto rep = verify_classic_ch(random_int_matrix(n, 100 * static_cast<std::uint64_t>(n) + s));
      CHECK(rep.theorem == "ch");
      CHECK(rep.passed());
    }
}

TEST_CASE_FIXTURE(Fresh, "verify_phillips") {
  auto ch = verify_phillips(specialize_CH(random_int_matrix(3, 11)));
  CHECK(ch.theorem == "phillips");
  CHECK(ch.passed());

  // Textbook antisymmetric pairing at k = 2: A = (B2, -B1).
  auto B = gen_commuting(spec_of("powers-of-one", 2, 2, 5));
  CHECK(verify_phillips(ConstraintFamily{2, 2, {B[1], -B[0]}, B, false}).passed());

  for (std::uint64_t s = 1; s <= 5; ++s) {
    auto Bs = gen_commuting(spec_of("conjugated-diagonal", 3, 3, s));
    CHECK(verify_phillips(gen_constrained(Bs, s)).passed());
  }

  ConstraintFamily bad = int_family(2, 2, 8);
  bad.A[0](0, 0) += PolyElem(1);
  auto repc = verify_phillips(bad);
  CHECK(repc.status == "hypothesis_violation");
  CHECK(repc.witness["kind"] == "constraint");

  RingMatrix Z(2), E12 = imat({{0, 1}, {0, 0}}), E21 = imat({{0, 0}, {1, 0}});
  auto repk = verify_phillips(ConstraintFamily{2, 2, {Z, Z}, {E12, E21}, false});
  CHECK(repk.status == "hypothesis_violation");
  CHECK(repk.witness["kind"] == "commutation");
}

TEST_CASE_FIXTURE(Fresh, "verify_cor_2matrices") {
  CHECK(verify_cor_2matrices(RingMatrix::identity(3), random_int_matrix(3, 3)).passed());
  RingMatrix M = random_int_matrix(2, 9);
  CHECK(verify_cor_2matrices(M, M).passed());

  RingMatrix C = random_int_matrix(3, 21, 2);
  RingMatrix Apoly = RingMatrix::identity(3).scaled(P("2")) + C.scaled(P("3")) - C * C;
  CHECK(verify_cor_2matrices(Apoly, C).passed());

  auto rep = verify_cor_2matrices(imat({{0, 1}, {0, 0}}), imat({{0, 0}, {1, 0}}));
  CHECK(rep.status == "hypothesis_violation");
  CHECK(rep.witness["kind"] == "commutation");
}

TEST_CASE_FIXTURE(Fresh, "ascending evaluation equals half the commutator at n = 2") {
  // Fully generic law: x1x2 - x1 D(I,A2) - x2 D(A1,I) + D(A1,A2) evaluated
  // ascending is (A1A2 - A2A1)/2, with D built here by column splicing.
  RingMatrix A1 = gmat(2, "a"), A2 = gmat(2, "b"), I = RingMatrix::identity(2);
  RingMatrix F = A1 * A2 - A1.scaled(D2(I, A2)) - A2.scaled(D2(A1, I)) + I.scaled(D2(A1, A2));
  RingMatrix half_comm = (A1 * A2 - A2 * A1).scaled(P("1/2"));
  CHECK(F == half_comm);

  RingMatrix E12 = imat({{0, 1}, {0, 0}}), E21 = imat({{0, 0}, {1, 0}});
  auto rep = verify_bapat_roy({E12, E21}, 5);
  CHECK(rep.theorem == "bapat-roy");
  CHECK(rep.status == "fail");
  CHECK(rep.witness["entry"] == nlohmann::ordered_json::array({1, 1}));
  CHECK(rep.witness["value"] == "1/2");
  CHECK(rep.counts["symmetrized_zero"] == 1);
  CHECK(rep.params["alt_order"].size() == 2);
  CHECK(rep.counts.contains("alt_order_zero"));

  // Vanishing cases: n = 1, and repeated arguments (any n).
  CHECK(verify_bapat_roy({mat({{"7"}})}, 1).passed());
  RingMatrix M2 = random_int_matrix(2, 31);
  CHECK(verify_bapat_roy({M2, M2}, 1).passed());
  RingMatrix M3 = random_int_matrix(3, 32);
  CHECK(verify_bapat_roy({M3, M3, M3}, 2).passed());

  // Random pairs: the report fails exactly when the commutator is nonzero,
  // and the witness is its first nonzero entry; symmetrizing always vanishes.
  for (std::uint64_t s : {41, 42, 43}) {
    RingMatrix X = random_int_matrix(2, s), Y = random_int_matrix(2, s + 100);
    auto r = verify_bapat_roy({X, Y}, s);
    auto fz = first_nonzero((X * Y - Y * X).scaled(P("1/2")));
    CHECK(r.passed() == !fz.has_value());
    if (fz) {
      CHECK(r.witness["entry"] == nlohmann::ordered_json::array({fz->first[0], fz->first[1]}));
      CHECK(r.witness["value"] == fz->second);
    }
    CHECK(r.counts["symmetrized_zero"] == 1);
  }
}

TEST_CASE_FIXTURE(Fresh, "verify_mixed_theorem") {
  // 1x1 instance of the row constraint, fully symbolic.
  MixedConstraintFamily one;
  one.n = 1;
  one.k = 2;
  one.A = {{mat({{"b2"}}), mat({{"-b1"}})}};
  one.B = {{mat({{"b1"}}), mat({{"b2"}})}};
  auto r1 = verify_mixed_theorem(one);
  CHECK(r1.theorem == "mixed");
  CHECK(r1.passed());

  for (int n = 2; n <= 3; ++n) {
    auto Ms = gen_commuting(spec_of("powers-of-one", n, n, static_cast<std::uint64_t>(n)));
    CHECK(verify_mixed_theorem(specialize_cor16(Ms)).passed());
  }
  for (std::uint64_t s = 1; s <= 5; ++s)
    CHECK(verify_mixed_theorem(gen_mixed_constrained(spec_of("powers-of-one", 2, 2, s))).passed());

  MixedConstraintFamily bad = gen_mixed_constrained(spec_of("powers-of-one", 2, 2, 9));
  bad.A[0][0](0, 0) += PolyElem(1);
  auto repc = verify_mixed_theorem(bad);
  CHECK(repc.status == "hypothesis_violation");
  CHECK(repc.witness["kind"] == "constraint");
}

TEST_CASE_FIXTURE(Fresh, "grouped cancellation of the worked weight pairs") {
  // Pairs (a)+(b): summing both families over all labels factors the common
  // piece out of the bracket, leaving sum_s (A_s)_{22}(B_s)_{12} * (sum_r
  // A_rB_r)_{11} -- zero exactly when the constraint holds.
  auto A = gmats(2, 2, "a"), B = gmats(2, 2, "b");
  PolyElem lhs;
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) {
      Pathmutation pa{{2, 2, {0, 1}, {r, s}}, {2, 2, {0, 0, 1}, {r, s}}};
      Pathmap pb{{2, 2, {0, 1}, {1, 1}, {r, s}}, {2, 2, {1, 0, 1}, {r, s}}};
      lhs += swgt_pathmutation(pa, A, B) + swgt_pathmap(pb, A, B);
    }
  RingMatrix AB = A[0] * B[0] + A[1] * B[1];
  PolyElem rhs;
  for (int s = 0; s < 2; ++s) rhs += A[s](1, 1) * B[s](0, 1) * AB(0, 0);
  CHECK(lhs == rhs);
}

TEST_CASE_FIXTURE(Fresh, "lemma sums vanish under the hypotheses") {
  // n = 1, k = 2 telescoping family (symbolic).
  ConstraintFamily f1{1, 2, {mat({{"b2"}}), mat({{"-b1"}})}, {mat({{"b1"}}), mat({{"b2"}})}, false};
  CHECK(lemma_G_sum(f1, 0, 0).is_zero());
  CHECK(lemma_H_sum(f1, 0, 0).is_zero());  // H(1, k) is empty

  ConstraintFamily fsym =
      constrained_family_symbolic_C(gen_commuting(spec_of("diagonal-generic", 2, 2, 1)));
  ConstraintFamily fint = int_family(3, 2, 13);
  for (int b = 0; b < 2; ++b)
    for (int e = 0; e < 2; ++e) {
      CHECK(lemma_G_sum(fsym, b, e).is_zero());
      CHECK(lemma_H_sum(fsym, b, e).is_zero());
    }
  for (int b = 0; b < 3; ++b)
    for (int e = 0; e < 3; ++e) {
      CHECK(lemma_G_sum(fint, b, e).is_zero());
      CHECK(lemma_H_sum(fint, b, e).is_zero());
    }

  ConstraintFamily bad = int_family(2, 2, 14);
  bad.A[1](1, 1) += PolyElem(2);
  CHECK_THROWS_AS(lemma_G_sum(bad, 0, 0), HypothesisViolation);
}

TEST_CASE_FIXTURE(Fresh, "pathmutation entry identity") {
  ConstraintFamily f1{1, 2, {mat({{"b2"}}), mat({{"-b1"}})}, {mat({{"b1"}}), mat({{"b2"}})}, false};
  CHECK(pathmutation_entry_identity(f1, 0, 0).passed());

  // Needs only B-commutation: free symbolic A with a symbolic diagonal B.
  ConstraintFamily free_a{2, 2, gmats(2, 2, "a"),
                          gen_commuting(spec_of("diagonal-generic", 2, 2, 1)), false};
  for (int b = 0; b < 2; ++b)
    for (int e = 0; e < 2; ++e) {
      auto rep = pathmutation_entry_identity(free_a, b, e);
      CHECK(rep.theorem == "pathmutation-entry");
      CHECK(rep.passed());
    }

  ConstraintFamily fint = int_family(3, 2, 15);
  for (int b = 0; b < 3; ++b)
    for (int e = 0; e < 3; ++e) CHECK(pathmutation_entry_identity(fint, b, e).passed());

  ConstraintFamily nc{2, 2, gmats(2, 2, "a"),
                      {imat({{0, 1}, {0, 0}}), imat({{0, 0}, {1, 0}})}, false};
  auto rep = pathmutation_entry_identity(nc, 0, 0);
  CHECK(rep.status == "hypothesis_violation");
  CHECK(rep.witness["kind"] == "commutation");
}

TEST_CASE_FIXTURE(Fresh, "hatted lemma sums and the scaled entry identity") {
  MixedConstraintFamily one;
  one.n = 1;
  one.k = 2;
  one.A = {{mat({{"b2"}}), mat({{"-b1"}})}};
  one.B = {{mat({{"b1"}}), mat({{"b2"}})}};
  CHECK(lemma_G2_sum(one, 0, 0).is_zero());
  CHECK(lemma_H2_sum(one, 0, 0).is_zero());
  auto r1 = pathmutation2_entry_identity(one, 0, 0);
  CHECK(r1.passed());
  CHECK(r1.counts["matches_unscaled_form"] == 1);  // 1! leaves the sum unscaled

  MixedConstraintFamily msym = mixed_family_symbolic_C(2, 2);
  for (int b = 0; b < 2; ++b)
    for (int e = 0; e < 2; ++e) {
      CHECK(lemma_G2_sum(msym, b, e).is_zero());
      CHECK(lemma_H2_sum(msym, b, e).is_zero());
      auto rep = pathmutation2_entry_identity(msym, b, e);
      CHECK(rep.theorem == "pathmutation2-entry");
      CHECK(rep.passed());
      CHECK(rep.counts["pathmutations2"] == 32);
      // The row constraints hold here, so phat(B) vanishes and both scalings
      // agree trivially.
      CHECK(rep.counts["matches_unscaled_form"] == 1);
    }

  // The identity needs only cross-row commutation. With a free symbolic A
  // grid and diagonal B the right side is generically nonzero on the
  // diagonal, which separates the n!-scaled form (holds) from the unscaled
  // one (fails); off the diagonal both sides vanish.
  MixedConstraintFamily freeA;
  freeA.n = 2;
  freeA.k = 2;
  for (int i = 0; i < 2; ++i) {
    std::vector<RingMatrix> arow, brow;
    for (int j = 0; j < 2; ++j) {
      std::string tag = std::to_string(i + 1) + std::to_string(j + 1) + "_";
      arow.push_back(gmat(2, "p" + tag));
      RingMatrix d(2);
      for (int r = 0; r < 2; ++r) d(r, r) = P("d" + tag + std::to_string(r + 1));
      brow.push_back(d);
    }
    freeA.A.push_back(arow);
    freeA.B.push_back(brow);
  }
  for (int b = 0; b < 2; ++b)
    for (int e = 0; e < 2; ++e) {
      auto rep = pathmutation2_entry_identity(freeA, b, e);
      CHECK(rep.passed());
      CHECK(rep.counts["matches_unscaled_form"] == (b == e ? 0 : 1));
    }

  MixedConstraintFamily mint = gen_mixed_constrained(spec_of("powers-of-one", 3, 2, 17));
  for (int b = 0; b < 3; ++b)
    for (int e = 0; e < 3; ++e) {
      CHECK(lemma_G2_sum(mint, b, e).is_zero());
      CHECK(lemma_H2_sum(mint, b, e).is_zero());
      CHECK(pathmutation2_entry_identity(mint, b, e).passed());
    }
}

TEST_CASE_FIXTURE(Fresh, "det_B minors match the adjugate of xI - M") {
  ConstraintFamily f1{1, 2, {mat({{"b2"}}), mat({{"-b1"}})}, {mat({{"b1"}}), mat({{"b2"}})}, false};
  CHECK(det_B_minor(f1, 0, 0) == RingMatrix::identity(1));
  CHECK(phillips_laplace_check(f1, 0, 0).passed());

  // For the CH family of a generic symbolic M, M^B is -(xI - M) evaluated at
  // M, so each det_B minor is (-1)^{n-1} det(minor(xI - M, i, j)) at x -> M.
  RingMatrix M = gmat(2, "m");
  ConstraintFamily f = specialize_CH(M);
  PolyElem x = P("x");
  RingMatrix N = RingMatrix::identity(2).scaled(x) - M;
  RingMatrix adj(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      PolyElem cof = det_expansion(minor(N, i, j));
      if ((i + j) % 2 == 1) cof = -cof;
      adj(j, i) = cof;
    }
  CHECK(adj * N == RingMatrix::identity(2).scaled(det_expansion(N)));
  CHECK(N * adj == RingMatrix::identity(2).scaled(det_expansion(N)));
  std::vector<VarId> xv = {var("x")};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      RingMatrix expect = -substitute_ascending(collect(det_expansion(minor(N, i, j)), xv), {M});
      CHECK(det_B_minor(f, i, j) == expect);
    }
  for (int b = 0; b < 2; ++b)
    for (int e = 0; e < 2; ++e) CHECK(phillips_laplace_check(f, b, e).passed());

  ConstraintFamily fint = int_family(3, 2, 19);
  for (int b = 0; b < 3; ++b)
    for (int e = 0; e < 3; ++e) {
      auto rep = phillips_laplace_check(fint, b, e);
      CHECK(rep.theorem == "laplace");
      CHECK(rep.passed());
    }
  CHECK_THROWS_AS(det_B_minor(fint, 5, 0), ConfigError);
}

TEST_CASE_FIXTURE(Fresh, "signed term family snapshots at n = k = 2") {
  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<std::string> unhatted = {
      "+A[r](1,1)*A[s](2,2)*B[r](1,1)*B[s](1,2)",
      "+A[r](1,1)*A[s](2,2)*B[r](1,2)*B[s](2,2)",
      "-A[r](1,2)*A[s](2,1)*B[r](1,1)*B[s](1,2)",
      "-A[r](1,2)*A[s](2,1)*B[r](1,2)*B[s](2,2)",
      "+A[r](1,2)*A[s](2,2)*B[r](2,1)*B[s](1,2)",
      "+A[r](1,2)*A[s](2,2)*B[r](2,2)*B[s](2,2)",
      "-A[s](2,2)*A[r](1,2)*B[r](2,1)*B[s](1,2)",
      "-A[s](2,2)*A[r](1,2)*B[r](2,2)*B[s](2,2)"};
  auto got = term_families_unhatted();
  CHECK(got.size() == 8);
  CHECK(sorted(got) == sorted(unhatted));

  std::vector<std::string> hatted = {
      "+A[a1,r](1,1)*A[a2,s](2,2)*B[a1,r](1,1)*B[a2,s](1,2)",
      "+A[a1,r](1,1)*A[a2,s](2,2)*B[a1,r](1,2)*B[a2,s](2,2)",
      "-A[a2,r](1,2)*A[a1,s](2,1)*B[a2,r](1,1)*B[a1,s](1,2)",
      "-A[a2,r](1,2)*A[a1,s](2,1)*B[a2,r](1,2)*B[a1,s](2,2)",
      "+A[a1,r](1,2)*A[a2,s](2,2)*B[a1,r](2,1)*B[a2,s](1,2)",
      "+A[a1,r](1,2)*A[a2,s](2,2)*B[a1,r](2,2)*B[a2,s](2,2)",
      "-A[a1,s](2,2)*A[a2,r](1,2)*B[a2,r](2,1)*B[a1,s](1,2)",
      "-A[a1,s](2,2)*A[a2,r](1,2)*B[a2,r](2,2)*B[a1,s](2,2)"};
  auto got2 = term_families_hatted();
  CHECK(got2.size() == 8);
  CHECK(sorted(got2) == sorted(hatted));
}

TEST_CASE_FIXTURE(Fresh, "suite drivers") {
  auto rl = verify_lemma_suite(int_family(2, 2, 23));
  CHECK(rl.theorem == "lemmas");
  CHECK(rl.passed());

  auto rs = verify_lemmas_symbolic(2, 2);
  CHECK(rs.passed());
  REQUIRE(rs.params.contains("term_families"));
  CHECK(rs.params["term_families"].size() == 8);
  std::vector<std::string> from_report = rs.params["term_families"];
  CHECK(from_report == term_families_unhatted());
  CHECK(rs.counts["term_families"] == 8);

  CHECK(verify_lemma2_suite(gen_mixed_constrained(spec_of("powers-of-one", 2, 2, 24))).passed());
  auto rs2 = verify_lemmas2_symbolic(2, 2);
  CHECK(rs2.passed());
  std::vector<std::string> from_report2 = rs2.params["term_families"];
  CHECK(from_report2 == term_families_hatted());

  CHECK(verify_laplace_suite(specialize_CH(gmat(2, "m"))).passed());
  CHECK(verify_laplace_suite(int_family(3, 2, 25)).passed());

  ConstraintFamily bad = int_family(2, 2, 26);
  bad.A[0](1, 0) += PolyElem(3);
  auto rb = verify_lemma_suite(bad);
  CHECK(rb.status == "hypothesis_violation");
  CHECK(rb.witness["kind"] == "constraint");
}

TEST_CASE_FIXTURE(Fresh, "report and file round-trips") {
  auto rep = verify_bapat_roy({imat({{0, 1}, {0, 0}}), imat({{0, 0}, {1, 0}})}, 5);
  VerificationReport rt = VerificationReport::from_json(rep.to_json());
  CHECK(rt.theorem == rep.theorem);
  CHECK(rt.params == rep.params);
  CHECK(rt.status == rep.status);
  CHECK(rt.witness == rep.witness);
  CHECK(rt.counts == rep.counts);
  CHECK(rt.elapsed_ms == rep.elapsed_ms);

  RingMatrix m = mat({{"a+1", "-2/3"}, {"0", "b^2"}});
  CHECK(matrix_from_json(matrix_to_json(m)) == m);

  MatrixTuple t{{m, RingMatrix::identity(2)}};
  auto t2 = tuple_from_json(tuple_to_json(t));
  REQUIRE(t2.mats.size() == 2);
  CHECK(t2.mats[0] == m);

  FamilySpec spec = spec_of("powers-of-one", 2, 2, 29);
  ConstraintFamily f = gen_constrained(gen_commuting(spec), spec.seed);
  auto jf = family_to_json(f, famspec_to_json(spec));
  CHECK(jf["kind"] == "constraint");
  REQUIRE(jf.contains("gen"));
  CHECK(jf["gen"]["seed"] == 29);
  ConstraintFamily f2 = family_from_json(jf);
  CHECK(f2.n == f.n);
  CHECK(f2.k == f.k);
  CHECK(f2.A == f.A);
  CHECK(f2.B == f.B);
  FamilySpec spec2 = famspec_from_json(jf["gen"]);
  CHECK(spec2.strategy == spec.strategy);
  CHECK(spec2.seed == spec.seed);

  MixedConstraintFamily mf = gen_mixed_constrained(spec_of("powers-of-one", 2, 2, 30));
  auto jm = mixed_family_to_json(mf);
  CHECK(jm["kind"] == "mixed");
  MixedConstraintFamily mf2 = mixed_family_from_json(jm);
  CHECK(mf2.A == mf.A);
  CHECK(mf2.B == mf.B);

  auto file = report_file_to_json({rep, verify_classic_ch(random_int_matrix(2, 31))});
  CHECK(file["schema"] == "v1");
  auto back = report_file_from_json(file);
  REQUIRE(back.size() == 2);
  CHECK(back[0].to_json() == rep.to_json());
  CHECK(report_file_to_json(back) == file);
}
