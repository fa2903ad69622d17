#pragma once
#include <functional>
#include <utility>
#include <vector>

#include "chv/matrix.hpp"
#include "json.hpp"

namespace chv {

// Hatted analogues of the decorated objects: every label becomes a pair
// (alpha-component in [n], ell-component in [k]) and the matrix families are
// n x k grids A[alpha][ell]. Indices 0-based internally, 1-based in JSON.

struct Decorated2Permutation {
  int n = 0, k = 0;
  std::vector<int> pi;      // permutation of {0..n-1}
  std::vector<int> alpha;   // permutation; the pair at position i is
                            // (alpha[pi[i]], labels[i])
  std::vector<int> labels;  // each in {0..k-1}
  bool operator==(const Decorated2Permutation&) const = default;
};

struct Decorated2Path {
  int n = 0, k = 0;
  std::vector<int> vertices;  // q_1..q_{n+1}
  std::vector<int> alpha;     // permutation; edge i carries (alpha[i], labels[i])
  std::vector<int> labels;
  bool operator==(const Decorated2Path&) const = default;
};

// Pair-synchronized: path pair i equals (alpha[pi[i]], labels[i]), i.e. the
// path's alpha array is alpha∘pi.
struct Pathmutation2 {
  Decorated2Permutation perm;
  Decorated2Path path;
  bool operator==(const Pathmutation2&) const = default;
};

struct Decorated2Map {
  int n = 0, k = 0;
  std::vector<int> sigma, tau;  // as in the unhatted decorated map
  std::vector<int> alpha;       // permutation, stored positionwise
  std::vector<int> labels;
  bool operator==(const Decorated2Map&) const = default;
};

struct Pathmap2 {
  Decorated2Map dmap;
  Decorated2Path path;
  bool operator==(const Pathmap2&) const = default;
};

void validate(const Decorated2Permutation& p);
void validate(const Decorated2Path& q);
void validate(const Pathmutation2& pm);
void validate(const Decorated2Map& m);
void validate(const Pathmap2& g);

bool is_pathmutation2(const Pathmap2& g);
Pathmap2 as_pathmap2(const Pathmutation2& pm);
Pathmutation2 as_pathmutation2(const Pathmap2& g);

// Weights over n x k matrix grids (grid[a][l] is the matrix with alpha
// component a and ell component l).
using MatrixGrid = std::vector<std::vector<RingMatrix>>;
PolyElem swgt_dec2perm(const Decorated2Permutation& p, const MatrixGrid& A);
PolyElem wgt_dec2path(const Decorated2Path& q, const MatrixGrid& B);
PolyElem wgt_dec2map(const Decorated2Map& m, const MatrixGrid& A);
PolyElem swgt_pathmutation2(const Pathmutation2& pm, const MatrixGrid& A, const MatrixGrid& B);
PolyElem wgt_pathmap2(const Pathmap2& g, const MatrixGrid& A, const MatrixGrid& B);
int sign_pathmap2(const Pathmap2& g);
PolyElem swgt_pathmap2(const Pathmap2& g, const MatrixGrid& A, const MatrixGrid& B);

// Hatted bijection A²(b,e) x [n] -> G²(b,e); hat_phi(pm, b) == pm. The
// rewritten first path edge starts at j.
Pathmap2 hat_phi(const Pathmutation2& pm, int j);
std::pair<Pathmutation2, int> hat_phi_inv(const Pathmap2& g);

// Sign-reversing involution on H²(b,e): the unhatted value swap of b and j in
// pi combined with composing alpha with the transposition (b j).
Pathmap2 involution_f2(const Pathmap2& g);

void enumerate_decorated_2permutations(
    int n, int k, const std::function<void(const Decorated2Permutation&)>& fn);
void enumerate_decorated_2paths(int n, int k, int b, int e,
                                const std::function<void(const Decorated2Path&)>& fn);
void enumerate_pathmutations2(int n, int k, int b, int e,
                              const std::function<void(const Pathmutation2&)>& fn);
void enumerate_decorated_2maps(int n, int k,
                               const std::function<void(const Decorated2Map&)>& fn);
void enumerate_H2(int n, int k, int b, int e, const std::function<void(const Pathmap2&)>& fn);
void enumerate_G2(int n, int k, int b, int e, const std::function<void(const Pathmap2&)>& fn);

Int count_decorated_2permutations(int n, int k);  // n!^2 k^n
Int count_decorated_2paths(int n, int k);         // n! k^n n^{n-1}
Int count_pathmutations2(int n, int k);           // n!^2 k^n n^{n-1}
Int count_decorated_2maps(int n, int k);          // n!^2 k^n (n^2 - n + 1)
Int count_H2(int n, int k);                       // (n-1) n!^2 k^n n^{n-1}
Int count_G2(int n, int k);                       // n n!^2 k^n n^{n-1}

nlohmann::ordered_json to_json(const Decorated2Permutation& p);
nlohmann::ordered_json to_json(const Decorated2Path& q);
nlohmann::ordered_json to_json(const Pathmutation2& pm);
nlohmann::ordered_json to_json(const Decorated2Map& m);
nlohmann::ordered_json to_json(const Pathmap2& g);

}  // namespace chv
