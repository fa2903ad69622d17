// Hatted (paired-label) combinatorial layer: counts with the extra n! factor,
// hat_phi, and the involution f2 whose alpha action is validated empirically.
#include "test_util.hpp"

using namespace chv;

namespace {

// Generic symbolic grid: entry (r,c) of matrix (ai, lj) is "<stem><ai><lj>_<r><c>".
MatrixGrid ggrid(int n, int k, const std::string& stem) {
  MatrixGrid g(n);
  for (int a = 0; a < n; ++a)
    for (int l = 0; l < k; ++l)
      g[a].push_back(gmat(n, stem + std::to_string(a + 1) + std::to_string(l + 1) + "_"));
  return g;
}

// Worked hatted objects at n=k=2, b=1, e=2; alpha = (a1,a2) and labels (r,s)
// stay free.
Pathmap2 hat_b(int a1, int a2, int r, int s) {
  return {{2, 2, {0, 1}, {1, 1}, {a1, a2}, {r, s}}, {2, 2, {1, 0, 1}, {a1, a2}, {r, s}}};
}
Pathmap2 hat_f(int a1, int a2, int r, int s) {
  return {{2, 2, {1, 0}, {1, 1}, {a2, a1}, {s, r}}, {2, 2, {1, 0, 1}, {a1, a2}, {r, s}}};
}

std::vector<std::string> dump_all_G2(int n, int k, int b, int e) {
  std::vector<std::string> out;
  enumerate_G2(n, k, b, e, [&](const Pathmap2& g) { out.push_back(to_json(g).dump()); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE_FIXTURE(Fresh, "paired weights read the alpha-selected matrix") {
  MatrixGrid A = ggrid(2, 2, "a"), B = ggrid(2, 2, "b");
  for (int a1 = 0; a1 < 2; ++a1) {
    int a2 = 1 - a1;
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s) {
        Decorated2Permutation id2{2, 2, {0, 1}, {a1, a2}, {r, s}};
        CHECK(swgt_dec2perm(id2, A) == A[a1][r](0, 0) * A[a2][s](1, 1));
        Decorated2Permutation sw{2, 2, {1, 0}, {a1, a2}, {r, s}};
        // Pair at position i is (alpha[pi[i]], labels[i]).
        CHECK(swgt_dec2perm(sw, A) == -(A[a2][r](0, 1) * A[a1][s](1, 0)));
        Decorated2Path q{2, 2, {0, 0, 1}, {a1, a2}, {r, s}};
        CHECK(wgt_dec2path(q, B) == B[a1][r](0, 0) * B[a2][s](0, 1));
      }
  }
}

TEST_CASE_FIXTURE(Fresh, "hatted counts carry the extra n! factor") {
  std::uint64_t a22 = 0;
  enumerate_pathmutations2(2, 2, 0, 1, [&](const Pathmutation2& pm) {
    CHECK_NOTHROW(validate(pm));
    ++a22;
  });
  // n!^2 k^n n^{n-1} at n=k=2 is 32 (the formula value; a worked count of 64
  // would contradict the formula, and enumeration decides in its favor).
  CHECK(a22 == 32);
  CHECK(count_pathmutations2(2, 2) == 32);

  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 2; ++k) {
      std::uint64_t a = 0, h = 0, g = 0, m = 0, p2 = 0, q2 = 0;
      enumerate_pathmutations2(n, k, 0, n - 1, [&](const Pathmutation2&) { ++a; });
      enumerate_H2(n, k, 0, n - 1, [&](const Pathmap2& x) {
        CHECK_NOTHROW(validate(x));
        ++h;
      });
      enumerate_G2(n, k, 0, n - 1, [&](const Pathmap2&) { ++g; });
      enumerate_decorated_2maps(n, k, [&](const Decorated2Map& dm) {
        CHECK_NOTHROW(validate(dm));
        ++m;
      });
      enumerate_decorated_2permutations(n, k, [&](const Decorated2Permutation&) { ++p2; });
      enumerate_decorated_2paths(n, k, 0, n - 1, [&](const Decorated2Path&) { ++q2; });
      CHECK(Int(a) == count_pathmutations2(n, k));
      CHECK(Int(h) == count_H2(n, k));
      CHECK(Int(g) == count_G2(n, k));
      CHECK(Int(m) == count_decorated_2maps(n, k));
      CHECK(Int(p2) == count_decorated_2permutations(n, k));
      CHECK(Int(q2) == count_decorated_2paths(n, k));
      CHECK(Int(h) == Int(n - 1) * Int(a));
      CHECK(Int(g) == Int(n) * Int(a));
      // Unhatted counts scale by n! exactly.
      CHECK(count_pathmutations2(n, k) == count_pathmutations(n, k) * count_decorated_permutations(n, 1));
      // The map-universe display without the alpha factor undercounts for n >= 2.
      Int displayed = count_decorated_maps(n, k);  // n! k^n (n^2-n+1)
      if (n >= 2) CHECK(count_decorated_2maps(n, k) != displayed);
      CHECK(count_decorated_2maps(n, k) == displayed * count_decorated_permutations(n, 1));
    }
}

TEST_CASE_FIXTURE(Fresh, "hatted validators") {
  CHECK_THROWS_AS(validate(Decorated2Permutation{2, 2, {0, 1}, {0, 0}, {0, 0}}), ConfigError);
  CHECK_THROWS_AS(validate(Decorated2Map{2, 2, {0, 1}, {1, 1}, {1, 1}, {0, 0}}), ConfigError);
  // Pathmutation2 requires path alpha = alpha o pi.
  Pathmutation2 pm{{2, 2, {1, 0}, {0, 1}, {0, 0}}, {2, 2, {0, 0, 1}, {0, 1}, {0, 0}}};
  CHECK_THROWS_AS(validate(pm), ConfigError);
  pm.path.alpha = {1, 0};  // alpha[pi[0]] = alpha[1] = 1, alpha[pi[1]] = alpha[0] = 0
  CHECK_NOTHROW(validate(pm));
  CHECK_NOTHROW(validate(hat_b(0, 1, 1, 0)));
  Pathmap2 bad = hat_b(0, 1, 0, 0);
  bad.path.vertices[0] = 0;  // must start at the repeated tau value
  CHECK_THROWS_AS(validate(bad), ConfigError);
}

TEST_CASE_FIXTURE(Fresh, "worked hatted signed weights match the worked products") {
  MatrixGrid A = ggrid(2, 2, "a"), B = ggrid(2, 2, "b");
  for (int a1 = 0; a1 < 2; ++a1) {
    int a2 = 1 - a1;
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s) {
        PolyElem prod =
            A[a1][r](0, 1) * A[a2][s](1, 1) * B[a1][r](1, 0) * B[a2][s](0, 1);
        CHECK(swgt_pathmap2(hat_b(a1, a2, r, s), A, B) == prod);
        CHECK(sign_pathmap2(hat_b(a1, a2, r, s)) == 1);
        CHECK(swgt_pathmap2(hat_f(a1, a2, r, s), A, B) == -prod);
        CHECK(sign_pathmap2(hat_f(a1, a2, r, s)) == -1);
      }
  }
}

TEST_CASE_FIXTURE(Fresh, "hat_phi is a bijection onto G2") {
  for (int n = 2; n <= 3; ++n) {
    int k = (n == 2) ? 2 : 1;  // keep the n=3 case small
    int b = 0, e = n - 1;
    std::vector<std::string> image;
    enumerate_pathmutations2(n, k, b, e, [&](const Pathmutation2& pm) {
      for (int j = 0; j < n; ++j) {
        Pathmap2 g = hat_phi(pm, j);
        CHECK_NOTHROW(validate(g));
        auto [back, jj] = hat_phi_inv(g);
        CHECK(back == pm);
        CHECK(jj == j);
        image.push_back(to_json(g).dump());
      }
    });
    std::sort(image.begin(), image.end());
    CHECK(std::adjacent_find(image.begin(), image.end()) == image.end());
    CHECK(image == dump_all_G2(n, k, b, e));
    enumerate_G2(n, k, b, e, [&](const Pathmap2& g) {
      auto [pm, j] = hat_phi_inv(g);
      CHECK(hat_phi(pm, j) == g);
    });
  }
  // hat_phi at j = b is the identity embedding.
  enumerate_pathmutations2(2, 2, 0, 1, [&](const Pathmutation2& pm) {
    CHECK(hat_phi(pm, 0) == as_pathmap2(pm));
    CHECK(as_pathmutation2(as_pathmap2(pm)) == pm);
  });
}

TEST_CASE_FIXTURE(Fresh, "involution f2 pairs worked terms with alpha values swapped") {
  for (int a1 = 0; a1 < 2; ++a1) {
    int a2 = 1 - a1;
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s) {
        CHECK(involution_f2(hat_b(a1, a2, r, s)) == hat_f(a1, a2, r, s));
        CHECK(involution_f2(hat_f(a1, a2, r, s)) == hat_b(a1, a2, r, s));
      }
  }
  Pathmutation2 pm{{2, 2, {0, 1}, {0, 1}, {0, 0}}, {2, 2, {0, 0, 1}, {0, 1}, {0, 0}}};
  CHECK_THROWS_AS(involution_f2(as_pathmap2(pm)), ConfigError);  // not in H2

  // Exhaustive at n=2 with fully generic grids; termwise, hypothesis-free.
  MatrixGrid A = ggrid(2, 2, "a"), B = ggrid(2, 2, "b");
  for (int b = 0; b < 2; ++b)
    for (int e = 0; e < 2; ++e) {
      PolyElem hsum;
      enumerate_H2(2, 2, b, e, [&](const Pathmap2& g) {
        Pathmap2 fg = involution_f2(g);
        CHECK(involution_f2(fg) == g);
        CHECK_FALSE(fg == g);
        CHECK(wgt_pathmap2(fg, A, B) == wgt_pathmap2(g, A, B));
        CHECK(swgt_pathmap2(fg, A, B) == -swgt_pathmap2(g, A, B));
        hsum += swgt_pathmap2(g, A, B);
      });
      CHECK(hsum.is_zero());
    }
}

TEST_CASE_FIXTURE(Fresh, "pathmutation2 weights factor through the pair") {
  MatrixGrid A = ggrid(2, 2, "a"), B = ggrid(2, 2, "b");
  enumerate_pathmutations2(2, 2, 0, 1, [&](const Pathmutation2& pm) {
    CHECK(swgt_pathmutation2(pm, A, B) ==
          swgt_dec2perm(pm.perm, A) * wgt_dec2path(pm.path, B));
    Pathmap2 g = as_pathmap2(pm);
    CHECK(is_pathmutation2(g));
    CHECK(swgt_pathmap2(g, A, B) == swgt_pathmutation2(pm, A, B));
  });
}

TEST_CASE_FIXTURE(Fresh, "hatted JSON presentation") {
  auto j = to_json(hat_b(0, 1, 1, 0));
  CHECK(j["sigma"] == nlohmann::ordered_json::array({1, 2}));
  CHECK(j["tau"] == nlohmann::ordered_json::array({2, 2}));
  CHECK(j["alpha"] == nlohmann::ordered_json::array({1, 2}));
  CHECK(j["labels"] == nlohmann::ordered_json::array({2, 1}));
  CHECK(j["vertices"] == nlohmann::ordered_json::array({2, 1, 2}));
  CHECK(j["path_alpha"] == nlohmann::ordered_json::array({1, 2}));
  CHECK(j["path_labels"] == nlohmann::ordered_json::array({2, 1}));
}
