#pragma once
#include <functional>
#include <utility>
#include <vector>

#include "chv/matrix.hpp"
#include "json.hpp"

namespace chv {

// Combinatorial objects behind the multivariate theorem. All indices are
// 0-based internally; JSON presentation is 1-based.

struct DecoratedPermutation {
  int n = 0, k = 0;
  std::vector<int> pi;      // permutation of {0..n-1}
  std::vector<int> labels;  // each in {0..k-1}
  bool operator==(const DecoratedPermutation&) const = default;
};

struct DecoratedPath {
  int n = 0, k = 0;
  std::vector<int> vertices;  // q_1..q_{n+1}, each in {0..n-1}
  std::vector<int> labels;    // n edge labels
  bool operator==(const DecoratedPath&) const = default;
};

// Label-synchronized pair; the set A(b,e) fixes the path endpoints.
struct Pathmutation {
  DecoratedPermutation perm;
  DecoratedPath path;
  bool operator==(const Pathmutation&) const = default;
};

// Relaxed permutation: tau may repeat one value, compensated by sigma being
// the identity or the transposition of the two repeat positions.
struct DecoratedMap {
  int n = 0, k = 0;
  std::vector<int> sigma, tau, labels;
  bool operator==(const DecoratedMap&) const = default;
};

struct Pathmap {
  DecoratedMap dmap;
  DecoratedPath path;
  bool operator==(const Pathmap&) const = default;
};

// Structural validation; throws ConfigError describing the first violation.
void validate(const DecoratedPermutation& p);
void validate(const DecoratedPath& q);
void validate(const Pathmutation& pm);
void validate(const DecoratedMap& m);
void validate(const Pathmap& g);

bool is_pathmutation(const Pathmap& g);  // tau is a permutation
Pathmap as_pathmap(const Pathmutation& pm);
Pathmutation as_pathmutation(const Pathmap& g);

// Weights. Matrix lists carry one matrix per label value (size k, each n×n).
PolyElem swgt_decperm(const DecoratedPermutation& p, const std::vector<RingMatrix>& A);
PolyElem wgt_decpath(const DecoratedPath& q, const std::vector<RingMatrix>& B);
PolyElem wgt_decmap(const DecoratedMap& m, const std::vector<RingMatrix>& A);
PolyElem swgt_pathmutation(const Pathmutation& pm, const std::vector<RingMatrix>& A,
                           const std::vector<RingMatrix>& B);
PolyElem wgt_pathmap(const Pathmap& g, const std::vector<RingMatrix>& A,
                     const std::vector<RingMatrix>& B);
// Sign of a pathmap: sgn of the underlying permutation of phi_inv(g). Always
// computed through phi_inv, never stored.
int sign_pathmap(const Pathmap& g);
PolyElem swgt_pathmap(const Pathmap& g, const std::vector<RingMatrix>& A,
                      const std::vector<RingMatrix>& B);

// The bijection A(b,e) x [n] -> G(b,e) and its inverse. phi(pm, b) == pm.
Pathmap phi(const Pathmutation& pm, int j);
std::pair<Pathmutation, int> phi_inv(const Pathmap& g);

// Sign-reversing, weight-preserving involution on H(b,e); rejects A-elements.
Pathmap involution_f(const Pathmap& g);

// Deterministic enumeration, lexicographic over (permutation part, labels,
// path vertices). Counts satisfy the closed formulas below.
void enumerate_decorated_permutations(int n, int k,
                                      const std::function<void(const DecoratedPermutation&)>& fn);
void enumerate_decorated_paths(int n, int k, int b, int e,
                               const std::function<void(const DecoratedPath&)>& fn);
void enumerate_pathmutations(int n, int k, int b, int e,
                             const std::function<void(const Pathmutation&)>& fn);
void enumerate_decorated_maps(int n, int k, const std::function<void(const DecoratedMap&)>& fn);
void enumerate_H(int n, int k, int b, int e, const std::function<void(const Pathmap&)>& fn);
void enumerate_G(int n, int k, int b, int e, const std::function<void(const Pathmap&)>& fn);

Int count_decorated_permutations(int n, int k);  // n! k^n
Int count_decorated_paths(int n, int k);         // k^n n^{n-1}  (endpoints fixed)
Int count_pathmutations(int n, int k);           // n! k^n n^{n-1}
Int count_decorated_maps(int n, int k);          // n! k^n (n^2 - n + 1)
Int count_H(int n, int k);                       // (n-1) n! k^n n^{n-1}
Int count_G(int n, int k);                       // n n! k^n n^{n-1}

// 1-based JSON forms.
nlohmann::ordered_json to_json(const DecoratedPermutation& p);
nlohmann::ordered_json to_json(const DecoratedPath& q);
nlohmann::ordered_json to_json(const Pathmutation& pm);
nlohmann::ordered_json to_json(const DecoratedMap& m);
nlohmann::ordered_json to_json(const Pathmap& g);

// Odometer over words of the given length with digits 0..base-1, last digit
// fastest; calls fn exactly base^length times (once for length 0).
void for_each_word(int length, int base, const std::function<void(const std::vector<int>&)>& fn);

Int int_pow(Int base, unsigned e);

}  // namespace chv
