#include "chv/decorated2.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "chv/decorated.hpp"
#include "chv/error.hpp"

namespace chv {
namespace {

using Json = nlohmann::ordered_json;

void check_sizes(int n, int k) {
  if (n < 1 || k < 1) throw ConfigError("object sizes must satisfy n >= 1, k >= 1");
}

bool is_permutation(const std::vector<int>& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

void check_labels(const std::vector<int>& labels, int n, int k, const char* what) {
  if (static_cast<int>(labels.size()) != n)
    throw ConfigError(std::string(what) + ": expected n ell-labels");
  for (int l : labels)
    if (l < 0 || l >= k) throw ConfigError(std::string(what) + ": ell-label out of range");
}

void check_grid(const MatrixGrid& g, int n, int k, const char* what) {
  if (static_cast<int>(g.size()) != n)
    throw ConfigError(std::string(what) + ": expected n rows of matrices");
  for (const auto& row : g) {
    if (static_cast<int>(row.size()) != k)
      throw ConfigError(std::string(what) + ": expected k matrices per row");
    for (const auto& m : row)
      if (m.n() != n) throw ConfigError(std::string(what) + ": matrix is not n x n");
  }
}

std::pair<int, int> repeated_pair(const std::vector<int>& tau) {
  for (std::size_t s = 0; s < tau.size(); ++s)
    for (std::size_t t = s + 1; t < tau.size(); ++t)
      if (tau[s] == tau[t]) return {static_cast<int>(s), static_cast<int>(t)};
  throw ConfigError("tau has no repeated value");
}

int missing_value(const std::vector<int>& tau, int n) {
  std::vector<bool> seen(n, false);
  for (int v : tau) seen[v] = true;
  for (int v = 0; v < n; ++v)
    if (!seen[v]) return v;
  throw ConfigError("tau has no missing value");
}

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

// alpha∘pi, positionwise: result[i] = alpha[pi[i]].
std::vector<int> compose(const std::vector<int>& alpha, const std::vector<int>& pi) {
  std::vector<int> r(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) r[i] = alpha[pi[i]];
  return r;
}

}  // namespace

void validate(const Decorated2Permutation& p) {
  check_sizes(p.n, p.k);
  if (!is_permutation(p.pi, p.n)) throw ConfigError("pi is not a permutation of [n]");
  if (!is_permutation(p.alpha, p.n)) throw ConfigError("alpha is not a permutation of [n]");
  check_labels(p.labels, p.n, p.k, "decorated 2-permutation");
}

void validate(const Decorated2Path& q) {
  check_sizes(q.n, q.k);
  if (static_cast<int>(q.vertices.size()) != q.n + 1)
    throw ConfigError("decorated 2-path: expected n+1 vertices");
  for (int v : q.vertices)
    if (v < 0 || v >= q.n) throw ConfigError("decorated 2-path: vertex out of range");
  if (!is_permutation(q.alpha, q.n))
    throw ConfigError("decorated 2-path: alpha is not a permutation");
  check_labels(q.labels, q.n, q.k, "decorated 2-path");
}

void validate(const Pathmutation2& pm) {
  validate(pm.perm);
  validate(pm.path);
  if (pm.perm.n != pm.path.n || pm.perm.k != pm.path.k)
    throw ConfigError("2-pathmutation: mismatched sizes");
  if (pm.path.alpha != compose(pm.perm.alpha, pm.perm.pi) || pm.perm.labels != pm.path.labels)
    throw ConfigError("2-pathmutation: label pairs do not match positionwise");
}

void validate(const Decorated2Map& m) {
  check_sizes(m.n, m.k);
  // Reuse the unhatted structural rules for (sigma, tau, ell).
  validate(DecoratedMap{m.n, m.k, m.sigma, m.tau, m.labels});
  if (!is_permutation(m.alpha, m.n))
    throw ConfigError("decorated 2-map: alpha is not a permutation");
}

bool is_pathmutation2(const Pathmap2& g) { return is_permutation(g.dmap.tau, g.dmap.n); }

void validate(const Pathmap2& g) {
  validate(g.dmap);
  validate(g.path);
  if (g.dmap.n != g.path.n || g.dmap.k != g.path.k)
    throw ConfigError("2-pathmap: mismatched sizes");
  if (is_pathmutation2(g)) {
    if (g.dmap.alpha != g.path.alpha || g.dmap.labels != g.path.labels)
      throw ConfigError("2-pathmap: label pairs must match when tau is a permutation");
    return;
  }
  auto [s, t] = repeated_pair(g.dmap.tau);
  if (g.path.vertices[0] != g.dmap.tau[s])
    throw ConfigError("2-pathmap: q_1 must equal the repeated tau value");
  for (int r = 0; r < g.dmap.n; ++r)
    if (r != s && r != t &&
        (g.dmap.alpha[r] != g.path.alpha[r] || g.dmap.labels[r] != g.path.labels[r]))
      throw ConfigError("2-pathmap: label pairs must match away from the repeated positions");
  bool identity_case = g.dmap.sigma[s] == s;
  int as = identity_case ? g.path.alpha[s] : g.path.alpha[t];
  int at = identity_case ? g.path.alpha[t] : g.path.alpha[s];
  int ls = identity_case ? g.path.labels[s] : g.path.labels[t];
  int lt = identity_case ? g.path.labels[t] : g.path.labels[s];
  if (g.dmap.alpha[s] != as || g.dmap.alpha[t] != at || g.dmap.labels[s] != ls ||
      g.dmap.labels[t] != lt)
    throw ConfigError("2-pathmap: repeated-position label pairs violate the sigma pairing");
}

Pathmap2 as_pathmap2(const Pathmutation2& pm) {
  Decorated2Map m{pm.perm.n,  pm.perm.k, identity_perm(pm.perm.n),
                  pm.perm.pi, compose(pm.perm.alpha, pm.perm.pi), pm.perm.labels};
  return Pathmap2{std::move(m), pm.path};
}

Pathmutation2 as_pathmutation2(const Pathmap2& g) {
  if (!is_pathmutation2(g)) throw ConfigError("2-pathmap is not a 2-pathmutation");
  // Recover alpha on values: alpha[tau[r]] = map alpha at r.
  std::vector<int> alpha(g.dmap.n);
  for (int r = 0; r < g.dmap.n; ++r) alpha[g.dmap.tau[r]] = g.dmap.alpha[r];
  Decorated2Permutation p{g.dmap.n, g.dmap.k, g.dmap.tau, std::move(alpha), g.dmap.labels};
  return Pathmutation2{std::move(p), g.path};
}

PolyElem swgt_dec2perm(const Decorated2Permutation& p, const MatrixGrid& A) {
  validate(p);
  check_grid(A, p.n, p.k, "swgt_dec2perm");
  PolyElem w(permutation_sign(p.pi));
  for (int i = 0; i < p.n; ++i) w *= A[p.alpha[p.pi[i]]][p.labels[i]](i, p.pi[i]);
  return w;
}

PolyElem wgt_dec2path(const Decorated2Path& q, const MatrixGrid& B) {
  validate(q);
  check_grid(B, q.n, q.k, "wgt_dec2path");
  PolyElem w(1);
  for (int i = 0; i < q.n; ++i)
    w *= B[q.alpha[i]][q.labels[i]](q.vertices[i], q.vertices[i + 1]);
  return w;
}

PolyElem wgt_dec2map(const Decorated2Map& m, const MatrixGrid& A) {
  validate(m);
  check_grid(A, m.n, m.k, "wgt_dec2map");
  PolyElem w(1);
  for (int i = 0; i < m.n; ++i) w *= A[m.alpha[i]][m.labels[i]](m.sigma[i], m.tau[i]);
  return w;
}

PolyElem swgt_pathmutation2(const Pathmutation2& pm, const MatrixGrid& A, const MatrixGrid& B) {
  return swgt_dec2perm(pm.perm, A) * wgt_dec2path(pm.path, B);
}

PolyElem wgt_pathmap2(const Pathmap2& g, const MatrixGrid& A, const MatrixGrid& B) {
  return wgt_dec2map(g.dmap, A) * wgt_dec2path(g.path, B);
}

int sign_pathmap2(const Pathmap2& g) { return permutation_sign(hat_phi_inv(g).first.perm.pi); }

PolyElem swgt_pathmap2(const Pathmap2& g, const MatrixGrid& A, const MatrixGrid& B) {
  return PolyElem(sign_pathmap2(g)) * wgt_pathmap2(g, A, B);
}

Pathmap2 hat_phi(const Pathmutation2& pm, int j) {
  validate(pm);
  if (j < 0 || j >= pm.perm.n) throw ConfigError("hat_phi: j out of range");
  int b = pm.path.vertices[0];
  if (j == b) return as_pathmap2(pm);

  Decorated2Path path = pm.path;
  path.vertices[0] = j;

  int s = -1, t = -1;
  for (int r = 0; r < pm.perm.n; ++r) {
    if (pm.perm.pi[r] == b) s = r;
    if (pm.perm.pi[r] == j) t = r;
  }
  int lo = std::min(s, t), hi = std::max(s, t);
  Decorated2Map m{pm.perm.n,  pm.perm.k, identity_perm(pm.perm.n),
                  pm.perm.pi, compose(pm.perm.alpha, pm.perm.pi), pm.perm.labels};
  m.sigma[s] = lo;
  m.tau[s] = j;
  m.alpha[s] = pm.perm.alpha[pm.perm.pi[lo]];
  m.labels[s] = pm.perm.labels[lo];
  m.sigma[t] = hi;
  m.tau[t] = j;
  m.alpha[t] = pm.perm.alpha[pm.perm.pi[hi]];
  m.labels[t] = pm.perm.labels[hi];
  return Pathmap2{std::move(m), std::move(path)};
}

std::pair<Pathmutation2, int> hat_phi_inv(const Pathmap2& g) {
  validate(g);
  if (is_pathmutation2(g)) return {as_pathmutation2(g), g.path.vertices[0]};

  auto [s, t] = repeated_pair(g.dmap.tau);
  int j = g.dmap.tau[s];
  int b = missing_value(g.dmap.tau, g.dmap.n);

  Decorated2Path path = g.path;
  path.vertices[0] = b;

  std::vector<int> pi = g.dmap.tau;
  pi[s] = g.dmap.sigma[s] == s ? b : j;
  pi[t] = g.dmap.sigma[t] == s ? b : j;

  // alpha on values: the repeated positions carry alpha at b and j (in sorted
  // position order), the rest carry alpha at their tau values.
  std::vector<int> alpha(g.dmap.n);
  for (int r = 0; r < g.dmap.n; ++r)
    if (r != s && r != t) alpha[g.dmap.tau[r]] = g.dmap.alpha[r];
  alpha[b] = g.dmap.alpha[s];
  alpha[j] = g.dmap.alpha[t];

  Decorated2Permutation perm{g.dmap.n, g.dmap.k, std::move(pi), std::move(alpha),
                             g.path.labels};
  return {Pathmutation2{std::move(perm), std::move(path)}, j};
}

Pathmap2 involution_f2(const Pathmap2& g) {
  auto [pm, j] = hat_phi_inv(g);
  int b = pm.path.vertices[0];
  if (j == b) throw ConfigError("involution f2 is defined on H2(b,e) only");
  for (int r = 0; r < pm.perm.n; ++r) {
    if (pm.perm.pi[r] == b)
      pm.perm.pi[r] = j;
    else if (pm.perm.pi[r] == j)
      pm.perm.pi[r] = b;
  }
  std::swap(pm.perm.alpha[b], pm.perm.alpha[j]);
  return hat_phi(pm, j);
}

void enumerate_decorated_2permutations(
    int n, int k, const std::function<void(const Decorated2Permutation&)>& fn) {
  check_sizes(n, k);
  for_each_permutation(n, [&](const std::vector<int>& pi) {
    for_each_permutation(n, [&](const std::vector<int>& alpha) {
      for_each_word(n, k, [&](const std::vector<int>& labels) {
        fn(Decorated2Permutation{n, k, pi, alpha, labels});
      });
    });
  });
}

void enumerate_decorated_2paths(int n, int k, int b, int e,
                                const std::function<void(const Decorated2Path&)>& fn) {
  check_sizes(n, k);
  if (b < 0 || b >= n || e < 0 || e >= n) throw ConfigError("path endpoints out of range");
  for_each_permutation(n, [&](const std::vector<int>& alpha) {
    for_each_word(n, k, [&](const std::vector<int>& labels) {
      for_each_word(n - 1, n, [&](const std::vector<int>& interior) {
        std::vector<int> vertices;
        vertices.reserve(n + 1);
        vertices.push_back(b);
        vertices.insert(vertices.end(), interior.begin(), interior.end());
        vertices.push_back(e);
        fn(Decorated2Path{n, k, std::move(vertices), alpha, labels});
      });
    });
  });
}

void enumerate_pathmutations2(int n, int k, int b, int e,
                              const std::function<void(const Pathmutation2&)>& fn) {
  check_sizes(n, k);
  if (b < 0 || b >= n || e < 0 || e >= n) throw ConfigError("path endpoints out of range");
  for_each_permutation(n, [&](const std::vector<int>& pi) {
    for_each_permutation(n, [&](const std::vector<int>& alpha) {
      std::vector<int> path_alpha = compose(alpha, pi);
      for_each_word(n, k, [&](const std::vector<int>& labels) {
        for_each_word(n - 1, n, [&](const std::vector<int>& interior) {
          std::vector<int> vertices;
          vertices.reserve(n + 1);
          vertices.push_back(b);
          vertices.insert(vertices.end(), interior.begin(), interior.end());
          vertices.push_back(e);
          Decorated2Permutation perm{n, k, pi, alpha, labels};
          Decorated2Path path{n, k, std::move(vertices), path_alpha, labels};
          fn(Pathmutation2{std::move(perm), std::move(path)});
        });
      });
    });
  });
}

void enumerate_decorated_2maps(int n, int k,
                               const std::function<void(const Decorated2Map&)>& fn) {
  check_sizes(n, k);
  enumerate_decorated_maps(n, k, [&](const DecoratedMap& m) {
    for_each_permutation(n, [&](const std::vector<int>& alpha) {
      fn(Decorated2Map{n, k, m.sigma, m.tau, alpha, m.labels});
    });
  });
}

void enumerate_H2(int n, int k, int b, int e, const std::function<void(const Pathmap2&)>& fn) {
  check_sizes(n, k);
  if (b < 0 || b >= n || e < 0 || e >= n) throw ConfigError("path endpoints out of range");
  if (n == 1) return;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      std::vector<int> free_pos;
      for (int r = 0; r < n; ++r)
        if (r != s && r != t) free_pos.push_back(r);
      for (int v = 0; v < n; ++v) {
        if (v == b) continue;
        std::vector<int> avail;
        for (int u = 0; u < n; ++u)
          if (u != v && u != b) avail.push_back(u);
        std::vector<int> arrangement(avail);
        do {
          std::vector<int> tau(n, v);
          for (std::size_t i = 0; i < free_pos.size(); ++i) tau[free_pos[i]] = arrangement[i];
          for (int sigma_case = 0; sigma_case < 2; ++sigma_case) {
            std::vector<int> sigma = identity_perm(n);
            if (sigma_case == 1) std::swap(sigma[s], sigma[t]);
            for_each_permutation(n, [&](const std::vector<int>& map_alpha) {
              for_each_word(n, k, [&](const std::vector<int>& map_labels) {
                std::vector<int> path_alpha = map_alpha;
                std::vector<int> path_labels = map_labels;
                if (sigma_case == 1) {
                  std::swap(path_alpha[s], path_alpha[t]);
                  std::swap(path_labels[s], path_labels[t]);
                }
                for_each_word(n - 1, n, [&](const std::vector<int>& interior) {
                  std::vector<int> vertices;
                  vertices.reserve(n + 1);
                  vertices.push_back(v);
                  vertices.insert(vertices.end(), interior.begin(), interior.end());
                  vertices.push_back(e);
                  Decorated2Map m{n, k, sigma, tau, map_alpha, map_labels};
                  Decorated2Path path{n, k, std::move(vertices), path_alpha, path_labels};
                  fn(Pathmap2{std::move(m), std::move(path)});
                });
              });
            });
          }
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
      }
    }
  }
}

void enumerate_G2(int n, int k, int b, int e, const std::function<void(const Pathmap2&)>& fn) {
  enumerate_pathmutations2(n, k, b, e, [&](const Pathmutation2& pm) { fn(as_pathmap2(pm)); });
  enumerate_H2(n, k, b, e, fn);
}

Int count_decorated_2permutations(int n, int k) {
  return factorial(static_cast<unsigned>(n)) * count_decorated_permutations(n, k);
}

Int count_decorated_2paths(int n, int k) {
  return factorial(static_cast<unsigned>(n)) * count_decorated_paths(n, k);
}

Int count_pathmutations2(int n, int k) {
  return factorial(static_cast<unsigned>(n)) * count_pathmutations(n, k);
}

Int count_decorated_2maps(int n, int k) {
  return factorial(static_cast<unsigned>(n)) * count_decorated_maps(n, k);
}

Int count_H2(int n, int k) { return Int(n - 1) * count_pathmutations2(n, k); }

Int count_G2(int n, int k) { return Int(n) * count_pathmutations2(n, k); }

namespace {

Json one_based(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x + 1);
  return a;
}

}  // namespace

Json to_json(const Decorated2Permutation& p) {
  return Json{{"pi", one_based(p.pi)}, {"alpha", one_based(p.alpha)},
              {"labels", one_based(p.labels)}};
}

Json to_json(const Decorated2Path& q) {
  return Json{{"vertices", one_based(q.vertices)}, {"alpha", one_based(q.alpha)},
              {"labels", one_based(q.labels)}};
}

Json to_json(const Pathmutation2& pm) {
  return Json{{"pi", one_based(pm.perm.pi)},
              {"alpha", one_based(pm.perm.alpha)},
              {"labels", one_based(pm.perm.labels)},
              {"vertices", one_based(pm.path.vertices)},
              {"path_alpha", one_based(pm.path.alpha)}};
}

Json to_json(const Decorated2Map& m) {
  return Json{{"sigma", one_based(m.sigma)}, {"tau", one_based(m.tau)},
              {"alpha", one_based(m.alpha)}, {"labels", one_based(m.labels)}};
}

Json to_json(const Pathmap2& g) {
  return Json{{"sigma", one_based(g.dmap.sigma)},
              {"tau", one_based(g.dmap.tau)},
              {"alpha", one_based(g.dmap.alpha)},
              {"labels", one_based(g.dmap.labels)},
              {"vertices", one_based(g.path.vertices)},
              {"path_alpha", one_based(g.path.alpha)},
              {"path_labels", one_based(g.path.labels)}};
}

}  // namespace chv
