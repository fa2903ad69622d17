#include "chv/gen.hpp"

#include <string>
#include <utility>

#include "chv/error.hpp"
#include "chv/rng.hpp"

namespace chv {
namespace {

// "b{a}{b}" while both display indices are single digits, "b{a}_{b}" once an
// index needs more; keeps names unambiguous at any size.
std::string name2(const char* stem, int a, int b) {
  std::string s(stem);
  s += std::to_string(a);
  if (a >= 10 || b >= 10) s += '_';
  s += std::to_string(b);
  return s;
}

std::string name3(const char* stem, int a, int b, int c) {
  std::string s(stem);
  s += std::to_string(a);
  s += '_';
  s += std::to_string(b);
  if (b >= 10 || c >= 10) s += '_';
  s += std::to_string(c);
  return s;
}

RingMatrix zero_matrix(int n) { return RingMatrix(n); }

RingMatrix random_matrix_from(Xoshiro256ss& rng, int n, int magnitude) {
  while (true) {
    RingMatrix m(n);
    bool nonzero = false;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        long long v = rng.int_in(-magnitude, magnitude);
        if (v != 0) nonzero = true;
        m(r, c) = PolyElem(v);
      }
    if (nonzero) return m;
  }
}

RingMatrix cyclic_shift(int n) {
  RingMatrix s(n);
  for (int i = 0; i < n; ++i) s(i, (i + 1) % n) = PolyElem(1);
  return s;
}

std::vector<RingMatrix> diagonal_generic(int n, int k) {
  std::vector<RingMatrix> B;
  B.reserve(k);
  for (int j = 1; j <= k; ++j) {
    RingMatrix m(n);
    for (int i = 1; i <= n; ++i) m(i - 1, i - 1) = PolyElem::variable(name2("b", j, i));
    B.push_back(std::move(m));
  }
  return B;
}

std::vector<RingMatrix> powers_of_one(const FamilySpec& spec, Xoshiro256ss& rng) {
  RingMatrix C;
  if (spec.symbolic) {
    C = RingMatrix(spec.n);
    for (int r = 1; r <= spec.n; ++r)
      for (int c = 1; c <= spec.n; ++c) C(r - 1, c - 1) = PolyElem::variable(name2("c", r, c));
  } else {
    C = random_matrix_from(rng, spec.n, spec.magnitude);
  }
  std::vector<RingMatrix> B;
  B.reserve(spec.k);
  RingMatrix power = RingMatrix::identity(spec.n);
  for (int j = 0; j < spec.k; ++j) {
    power = power * C;
    B.push_back(power);
  }
  return B;
}

std::vector<RingMatrix> circulant(const FamilySpec& spec, Xoshiro256ss& rng) {
  std::vector<RingMatrix> shifts;  // S^0 .. S^{n-1}
  shifts.push_back(RingMatrix::identity(spec.n));
  RingMatrix s = cyclic_shift(spec.n);
  for (int d = 1; d < spec.n; ++d) shifts.push_back(shifts.back() * s);
  std::vector<RingMatrix> B;
  B.reserve(spec.k);
  for (int j = 1; j <= spec.k; ++j) {
    while (true) {
      RingMatrix m(spec.n);
      bool nonzero = spec.symbolic;
      for (int d = 0; d < spec.n; ++d) {
        PolyElem coef;
        if (spec.symbolic) {
          coef = PolyElem::variable(name2("c", j, d + 1));
        } else {
          long long v = rng.int_in(-spec.magnitude, spec.magnitude);
          if (v == 0) continue;
          nonzero = true;
          coef = PolyElem(v);
        }
        m = m + shifts[d].scaled(coef);
      }
      if (nonzero) {
        B.push_back(std::move(m));
        break;
      }
    }
  }
  return B;
}

std::vector<RingMatrix> conjugated_diagonal(const FamilySpec& spec, Xoshiro256ss& rng) {
  int n = spec.n;
  RingMatrix P = RingMatrix::identity(n);
  RingMatrix Pinv = RingMatrix::identity(n);
  if (n > 1) {
    for (int op = 0; op < 3 * n; ++op) {
      if (rng.below(4) == 0) {
        // Row swap: P rows r, r2; Pinv columns r, r2.
        int r = static_cast<int>(rng.below(n));
        int r2 = static_cast<int>(rng.below(n - 1));
        if (r2 >= r) ++r2;
        for (int c = 0; c < n; ++c) std::swap(P(r, c), P(r2, c));
        for (int i = 0; i < n; ++i) std::swap(Pinv(i, r), Pinv(i, r2));
      } else {
        // P: row r2 += m * row r; Pinv: column r -= m * column r2.
        int r = static_cast<int>(rng.below(n));
        int r2 = static_cast<int>(rng.below(n - 1));
        if (r2 >= r) ++r2;
        PolyElem m(rng.int_in(-spec.magnitude, spec.magnitude));
        for (int c = 0; c < n; ++c) P(r2, c) += m * P(r, c);
        for (int i = 0; i < n; ++i) Pinv(i, r) -= m * Pinv(i, r2);
      }
    }
  }
  std::vector<RingMatrix> B;
  B.reserve(spec.k);
  for (int j = 1; j <= spec.k; ++j) {
    RingMatrix d(n);
    for (int i = 1; i <= n; ++i)
      d(i - 1, i - 1) = spec.symbolic ? PolyElem::variable(name2("d", j, i))
                                      : PolyElem(rng.int_in(-spec.magnitude, spec.magnitude));
    B.push_back(P * d * Pinv);
  }
  return B;
}

// Core of the antisymmetric construction: A_i = sum_j e_{ij} (C B_j) with e
// antisymmetric and not identically zero.
std::vector<RingMatrix> antisymmetric_A(const std::vector<RingMatrix>& B, Xoshiro256ss& rng,
                                        int magnitude) {
  int n = B[0].n();
  int k = static_cast<int>(B.size());
  RingMatrix C = random_matrix_from(rng, n, magnitude);
  std::vector<std::vector<long long>> e(k, std::vector<long long>(k, 0));
  while (true) {
    bool nonzero = false;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        e[i][j] = rng.int_in(-magnitude, magnitude);
        e[j][i] = -e[i][j];
        if (e[i][j] != 0) nonzero = true;
      }
    if (nonzero) break;
  }
  std::vector<RingMatrix> CB;
  CB.reserve(k);
  for (int j = 0; j < k; ++j) CB.push_back(C * B[j]);
  std::vector<RingMatrix> A;
  A.reserve(k);
  for (int i = 0; i < k; ++i) {
    RingMatrix a(n);
    for (int j = 0; j < k; ++j)
      if (e[i][j] != 0) a = a + CB[j].scaled(PolyElem(e[i][j]));
    A.push_back(std::move(a));
  }
  return A;
}

void check_same_square(const std::vector<RingMatrix>& B) {
  if (B.empty()) throw ConfigError("family requires at least one matrix");
  int n = B[0].n();
  if (n < 1) throw ConfigError("matrices must be at least 1 x 1");
  for (const auto& m : B)
    if (m.n() != n) throw ConfigError("matrices must share a common dimension");
}

}  // namespace

void validate(const FamilySpec& spec) {
  if (spec.n < 1 || spec.k < 1) throw ConfigError("family spec requires n >= 1 and k >= 1");
  if (spec.magnitude < 1) throw ConfigError("family spec requires magnitude >= 1");
  if (spec.strategy != "diagonal-generic" && spec.strategy != "powers-of-one" &&
      spec.strategy != "circulant" && spec.strategy != "conjugated-diagonal")
    throw ConfigError("unknown strategy: " + spec.strategy);
}

std::vector<RingMatrix> gen_commuting(const FamilySpec& spec) {
  validate(spec);
  Xoshiro256ss rng(spec.seed);
  if (spec.strategy == "diagonal-generic") return diagonal_generic(spec.n, spec.k);
  if (spec.strategy == "powers-of-one") return powers_of_one(spec, rng);
  if (spec.strategy == "circulant") return circulant(spec, rng);
  return conjugated_diagonal(spec, rng);
}

ConstraintFamily gen_constrained(const std::vector<RingMatrix>& B, std::uint64_t seed,
                                 int magnitude) {
  check_same_square(B);
  if (magnitude < 1) throw ConfigError("magnitude must be >= 1");
  int n = B[0].n();
  int k = static_cast<int>(B.size());
  ConstraintFamily f;
  f.n = n;
  f.k = k;
  f.B = B;
  if (k == 1) {
    f.A = {zero_matrix(n)};
    f.degenerate = true;
  } else {
    Xoshiro256ss rng(seed);
    f.A = antisymmetric_A(B, rng, magnitude);
  }
  require_valid(f);
  return f;
}

ConstraintFamily constrained_family_symbolic_C(const std::vector<RingMatrix>& B) {
  check_same_square(B);
  int n = B[0].n();
  int k = static_cast<int>(B.size());
  ConstraintFamily f;
  f.n = n;
  f.k = k;
  f.B = B;
  if (k == 1) {
    f.A = {zero_matrix(n)};
    f.degenerate = true;
    require_valid(f);
    return f;
  }
  RingMatrix C(n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) C(r - 1, c - 1) = PolyElem::variable(name2("u", r, c));
  std::vector<RingMatrix> CB;
  CB.reserve(k);
  for (int j = 0; j < k; ++j) CB.push_back(C * B[j]);
  for (int i = 0; i < k; ++i) {
    RingMatrix a(n);
    for (int j = 0; j < k; ++j) {
      if (j > i) a = a + CB[j];
      if (j < i) a = a - CB[j];
    }
    f.A.push_back(std::move(a));
  }
  require_valid(f);
  return f;
}

MixedConstraintFamily gen_mixed_constrained(const FamilySpec& spec) {
  validate(spec);
  FamilySpec pool_spec = spec;
  pool_spec.k = spec.n * spec.k;
  std::vector<RingMatrix> pool = gen_commuting(pool_spec);
  MixedConstraintFamily f;
  f.n = spec.n;
  f.k = spec.k;
  std::uint64_t st = spec.seed;
  (void)splitmix64(st);  // decorrelate the row streams from the pool stream
  for (int i = 0; i < spec.n; ++i) {
    std::vector<RingMatrix> row(pool.begin() + static_cast<std::ptrdiff_t>(i) * spec.k,
                                pool.begin() + static_cast<std::ptrdiff_t>(i + 1) * spec.k);
    std::vector<RingMatrix> arow;
    if (spec.k == 1) {
      arow = {zero_matrix(spec.n)};
    } else {
      Xoshiro256ss rng(splitmix64(st));
      arow = antisymmetric_A(row, rng, spec.magnitude);
    }
    f.A.push_back(std::move(arow));
    f.B.push_back(std::move(row));
  }
  require_valid(f);
  return f;
}

MixedConstraintFamily mixed_family_symbolic_C(int n, int k) {
  if (n < 1 || k < 1) throw ConfigError("mixed family requires n >= 1 and k >= 1");
  MixedConstraintFamily f;
  f.n = n;
  f.k = k;
  for (int i = 0; i < n; ++i) {
    std::vector<RingMatrix> row;
    row.reserve(k);
    for (int j = 0; j < k; ++j) {
      int t = i * k + j + 1;  // flat pool index, 1-based
      RingMatrix m(n);
      for (int p = 1; p <= n; ++p) m(p - 1, p - 1) = PolyElem::variable(name2("b", t, p));
      row.push_back(std::move(m));
    }
    RingMatrix C(n);
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c) C(r - 1, c - 1) = PolyElem::variable(name3("u", i + 1, r, c));
    std::vector<RingMatrix> CB;
    CB.reserve(k);
    for (int j = 0; j < k; ++j) CB.push_back(C * row[j]);
    std::vector<RingMatrix> arow;
    arow.reserve(k);
    for (int j = 0; j < k; ++j) {
      RingMatrix a(n);
      for (int j2 = 0; j2 < k; ++j2) {
        if (j2 > j) a = a + CB[j2];
        if (j2 < j) a = a - CB[j2];
      }
      arow.push_back(std::move(a));
    }
    if (k == 1) arow = {zero_matrix(n)};
    f.A.push_back(std::move(arow));
    f.B.push_back(std::move(row));
  }
  require_valid(f);
  return f;
}

ConstraintFamily specialize_CH(const RingMatrix& M) {
  if (M.n() < 1) throw ConfigError("matrix must be at least 1 x 1");
  ConstraintFamily f;
  f.n = M.n();
  f.k = 2;
  f.A = {-RingMatrix::identity(M.n()), M};
  f.B = {M, RingMatrix::identity(M.n())};
  require_valid(f);
  return f;
}

ConstraintFamily specialize_cor12(const RingMatrix& A, const RingMatrix& B) {
  if (A.n() != B.n() || A.n() < 1) throw ConfigError("matrices must share a dimension >= 1");
  ConstraintFamily f;
  f.n = A.n();
  f.k = 2;
  f.A = {A, -B};
  f.B = {B, A};
  require_valid(f);  // throws HypothesisViolation exactly when AB != BA
  return f;
}

MixedConstraintFamily specialize_cor16(const std::vector<RingMatrix>& Ms) {
  check_same_square(Ms);
  int n = Ms[0].n();
  if (static_cast<int>(Ms.size()) != n)
    throw ConfigError("corollary family requires n matrices of dimension n");
  MixedConstraintFamily f;
  f.n = n;
  f.k = 2;
  RingMatrix id = RingMatrix::identity(n);
  for (int i = 0; i < n; ++i) {
    f.A.push_back({id, Ms[i]});
    f.B.push_back({Ms[i], -id});
  }
  require_valid(f);  // throws HypothesisViolation when the M_i do not commute
  return f;
}

RingMatrix random_int_matrix(int n, std::uint64_t seed, int magnitude) {
  if (n < 1) throw ConfigError("matrix must be at least 1 x 1");
  if (magnitude < 1) throw ConfigError("magnitude must be >= 1");
  Xoshiro256ss rng(seed);
  return random_matrix_from(rng, n, magnitude);
}

}  // namespace chv
