#include "chv/decorated.hpp"

#include <algorithm>
#include <set>
#include <string>

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
    throw ConfigError(std::string(what) + ": expected n labels");
  for (int l : labels)
    if (l < 0 || l >= k) throw ConfigError(std::string(what) + ": label out of range");
}

void check_matrices(const std::vector<RingMatrix>& mats, int n, int k, const char* what) {
  if (static_cast<int>(mats.size()) != k)
    throw ConfigError(std::string(what) + ": expected k matrices");
  for (const auto& m : mats)
    if (m.n() != n) throw ConfigError(std::string(what) + ": matrix is not n x n");
}

// Positions (s < t) of the repeated tau value, if tau is not a permutation.
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

}  // namespace

void for_each_word(int length, int base, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> w(length, 0);
  for (;;) {
    fn(w);
    int i = length - 1;
    while (i >= 0 && w[i] == base - 1) w[i--] = 0;
    if (i < 0) return;
    ++w[i];
  }
}

Int int_pow(Int base, unsigned e) {
  Int r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

void validate(const DecoratedPermutation& p) {
  check_sizes(p.n, p.k);
  if (!is_permutation(p.pi, p.n)) throw ConfigError("pi is not a permutation of [n]");
  check_labels(p.labels, p.n, p.k, "decorated permutation");
}

void validate(const DecoratedPath& q) {
  check_sizes(q.n, q.k);
  if (static_cast<int>(q.vertices.size()) != q.n + 1)
    throw ConfigError("decorated path: expected n+1 vertices");
  for (int v : q.vertices)
    if (v < 0 || v >= q.n) throw ConfigError("decorated path: vertex out of range");
  check_labels(q.labels, q.n, q.k, "decorated path");
}

void validate(const Pathmutation& pm) {
  validate(pm.perm);
  validate(pm.path);
  if (pm.perm.n != pm.path.n || pm.perm.k != pm.path.k)
    throw ConfigError("pathmutation: mismatched sizes");
  if (pm.perm.labels != pm.path.labels)
    throw ConfigError("pathmutation: labels do not match positionwise");
}

void validate(const DecoratedMap& m) {
  check_sizes(m.n, m.k);
  if (!is_permutation(m.sigma, m.n)) throw ConfigError("sigma is not a permutation");
  int moved = 0;
  for (int i = 0; i < m.n; ++i)
    if (m.sigma[i] != i) ++moved;
  if (moved != 0 && moved != 2)
    throw ConfigError("sigma must be the identity or a single transposition");
  if (static_cast<int>(m.tau.size()) != m.n) throw ConfigError("tau must have n entries");
  for (int v : m.tau)
    if (v < 0 || v >= m.n) throw ConfigError("tau entry out of range");
  check_labels(m.labels, m.n, m.k, "decorated map");
  std::set<int> distinct(m.tau.begin(), m.tau.end());
  if (static_cast<int>(distinct.size()) < m.n - 1)
    throw ConfigError("tau must take at least n-1 distinct values");
  if (static_cast<int>(distinct.size()) == m.n && moved != 0)
    throw ConfigError("sigma must be the identity when tau is a permutation");
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j)
      if (m.tau[i] == m.tau[j] && !((m.sigma[i] == i && m.sigma[j] == j) ||
                                    (m.sigma[i] == j && m.sigma[j] == i)))
        throw ConfigError("sigma incompatible with the repeated tau positions");
}

bool is_pathmutation(const Pathmap& g) { return is_permutation(g.dmap.tau, g.dmap.n); }

void validate(const Pathmap& g) {
  validate(g.dmap);
  validate(g.path);
  if (g.dmap.n != g.path.n || g.dmap.k != g.path.k)
    throw ConfigError("pathmap: mismatched sizes");
  if (is_pathmutation(g)) {
    if (g.dmap.labels != g.path.labels)
      throw ConfigError("pathmap: labels must match positionwise when tau is a permutation");
    return;
  }
  auto [s, t] = repeated_pair(g.dmap.tau);
  if (g.path.vertices[0] != g.dmap.tau[s])
    throw ConfigError("pathmap: q_1 must equal the repeated tau value");
  for (int r = 0; r < g.dmap.n; ++r)
    if (r != s && r != t && g.dmap.labels[r] != g.path.labels[r])
      throw ConfigError("pathmap: labels must match away from the repeated positions");
  bool identity_case = g.dmap.sigma[s] == s;
  int ls = identity_case ? g.path.labels[s] : g.path.labels[t];
  int lt = identity_case ? g.path.labels[t] : g.path.labels[s];
  if (g.dmap.labels[s] != ls || g.dmap.labels[t] != lt)
    throw ConfigError("pathmap: repeated-position labels violate the sigma pairing");
}

Pathmap as_pathmap(const Pathmutation& pm) {
  DecoratedMap m{pm.perm.n, pm.perm.k, identity_perm(pm.perm.n), pm.perm.pi, pm.perm.labels};
  return Pathmap{std::move(m), pm.path};
}

Pathmutation as_pathmutation(const Pathmap& g) {
  if (!is_pathmutation(g)) throw ConfigError("pathmap is not a pathmutation");
  DecoratedPermutation p{g.dmap.n, g.dmap.k, g.dmap.tau, g.dmap.labels};
  return Pathmutation{std::move(p), g.path};
}

PolyElem swgt_decperm(const DecoratedPermutation& p, const std::vector<RingMatrix>& A) {
  validate(p);
  check_matrices(A, p.n, p.k, "swgt_decperm");
  PolyElem w(permutation_sign(p.pi));
  for (int i = 0; i < p.n; ++i) w *= A[p.labels[i]](i, p.pi[i]);
  return w;
}

PolyElem wgt_decpath(const DecoratedPath& q, const std::vector<RingMatrix>& B) {
  validate(q);
  check_matrices(B, q.n, q.k, "wgt_decpath");
  PolyElem w(1);
  for (int i = 0; i < q.n; ++i) w *= B[q.labels[i]](q.vertices[i], q.vertices[i + 1]);
  return w;
}

PolyElem wgt_decmap(const DecoratedMap& m, const std::vector<RingMatrix>& A) {
  validate(m);
  check_matrices(A, m.n, m.k, "wgt_decmap");
  PolyElem w(1);
  for (int i = 0; i < m.n; ++i) w *= A[m.labels[i]](m.sigma[i], m.tau[i]);
  return w;
}

PolyElem swgt_pathmutation(const Pathmutation& pm, const std::vector<RingMatrix>& A,
                           const std::vector<RingMatrix>& B) {
  return swgt_decperm(pm.perm, A) * wgt_decpath(pm.path, B);
}

PolyElem wgt_pathmap(const Pathmap& g, const std::vector<RingMatrix>& A,
                     const std::vector<RingMatrix>& B) {
  return wgt_decmap(g.dmap, A) * wgt_decpath(g.path, B);
}

int sign_pathmap(const Pathmap& g) { return permutation_sign(phi_inv(g).first.perm.pi); }

PolyElem swgt_pathmap(const Pathmap& g, const std::vector<RingMatrix>& A,
                      const std::vector<RingMatrix>& B) {
  return PolyElem(sign_pathmap(g)) * wgt_pathmap(g, A, B);
}

Pathmap phi(const Pathmutation& pm, int j) {
  validate(pm);
  if (j < 0 || j >= pm.perm.n) throw ConfigError("phi: j out of range");
  int b = pm.path.vertices[0];
  if (j == b) return as_pathmap(pm);

  DecoratedPath path = pm.path;
  path.vertices[0] = j;

  int s = -1, t = -1;
  for (int r = 0; r < pm.perm.n; ++r) {
    if (pm.perm.pi[r] == b) s = r;
    if (pm.perm.pi[r] == j) t = r;
  }
  int lo = std::min(s, t), hi = std::max(s, t);
  DecoratedMap m{pm.perm.n, pm.perm.k, identity_perm(pm.perm.n), pm.perm.pi, pm.perm.labels};
  m.sigma[s] = lo;
  m.tau[s] = j;
  m.labels[s] = pm.perm.labels[lo];
  m.sigma[t] = hi;
  m.tau[t] = j;
  m.labels[t] = pm.perm.labels[hi];
  return Pathmap{std::move(m), std::move(path)};
}

std::pair<Pathmutation, int> phi_inv(const Pathmap& g) {
  validate(g);
  if (is_pathmutation(g)) return {as_pathmutation(g), g.path.vertices[0]};

  auto [s, t] = repeated_pair(g.dmap.tau);
  int j = g.dmap.tau[s];  // == q'_1
  int b = missing_value(g.dmap.tau, g.dmap.n);

  DecoratedPath path = g.path;
  path.vertices[0] = b;

  // The pathmutation's labels must match the path's, positionwise.
  DecoratedPermutation perm{g.dmap.n, g.dmap.k, g.dmap.tau, g.path.labels};
  perm.pi[s] = g.dmap.sigma[s] == s ? b : j;
  perm.pi[t] = g.dmap.sigma[t] == s ? b : j;
  return {Pathmutation{std::move(perm), std::move(path)}, j};
}

Pathmap involution_f(const Pathmap& g) {
  auto [pm, j] = phi_inv(g);
  int b = pm.path.vertices[0];
  if (j == b) throw ConfigError("involution f is defined on H(b,e) only");
  for (int r = 0; r < pm.perm.n; ++r) {
    if (pm.perm.pi[r] == b)
      pm.perm.pi[r] = j;
    else if (pm.perm.pi[r] == j)
      pm.perm.pi[r] = b;
  }
  return phi(pm, j);
}

void enumerate_decorated_permutations(
    int n, int k, const std::function<void(const DecoratedPermutation&)>& fn) {
  check_sizes(n, k);
  for_each_permutation(n, [&](const std::vector<int>& pi) {
    for_each_word(n, k, [&](const std::vector<int>& labels) {
      fn(DecoratedPermutation{n, k, pi, labels});
    });
  });
}

void enumerate_decorated_paths(int n, int k, int b, int e,
                               const std::function<void(const DecoratedPath&)>& fn) {
  check_sizes(n, k);
  if (b < 0 || b >= n || e < 0 || e >= n) throw ConfigError("path endpoints out of range");
  for_each_word(n, k, [&](const std::vector<int>& labels) {
    for_each_word(n - 1, n, [&](const std::vector<int>& interior) {
      std::vector<int> vertices;
      vertices.reserve(n + 1);
      vertices.push_back(b);
      vertices.insert(vertices.end(), interior.begin(), interior.end());
      vertices.push_back(e);
      fn(DecoratedPath{n, k, std::move(vertices), labels});
    });
  });
}

void enumerate_pathmutations(int n, int k, int b, int e,
                             const std::function<void(const Pathmutation&)>& fn) {
  check_sizes(n, k);
  if (b < 0 || b >= n || e < 0 || e >= n) throw ConfigError("path endpoints out of range");
  for_each_permutation(n, [&](const std::vector<int>& pi) {
    for_each_word(n, k, [&](const std::vector<int>& labels) {
      for_each_word(n - 1, n, [&](const std::vector<int>& interior) {
        std::vector<int> vertices;
        vertices.reserve(n + 1);
        vertices.push_back(b);
        vertices.insert(vertices.end(), interior.begin(), interior.end());
        vertices.push_back(e);
        DecoratedPermutation perm{n, k, pi, labels};
        DecoratedPath path{n, k, std::move(vertices), labels};
        fn(Pathmutation{std::move(perm), std::move(path)});
      });
    });
  });
}

namespace {

// Shared tau-shape enumeration for maps with a repeated value: repeat
// positions s < t, repeated value v, remaining positions filled with an
// arrangement of allowed values; sigma is the identity or the (s t) swap.
// Emits (sigma, tau) pairs in lexicographic order of (s, t, v, arrangement,
// sigma-case).
void for_each_repeat_shape(int n, const std::vector<int>& values_for_v,
                           const std::function<void(const std::vector<int>&,
                                                    const std::vector<int>&)>& fn) {
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      std::vector<int> free_pos;
      for (int r = 0; r < n; ++r)
        if (r != s && r != t) free_pos.push_back(r);
      for (int v : values_for_v) {
        std::vector<int> avail;
        for (int u = 0; u < n; ++u)
          if (u != v) avail.push_back(u);
        // Arrangements of free_pos.size() values out of avail, lex order.
        std::vector<int> arrangement(avail);
        do {
          std::vector<int> tau(n, v);
          for (std::size_t i = 0; i < free_pos.size(); ++i) tau[free_pos[i]] = arrangement[i];
          for (int sigma_case = 0; sigma_case < 2; ++sigma_case) {
            std::vector<int> sigma = identity_perm(n);
            if (sigma_case == 1) std::swap(sigma[s], sigma[t]);
            fn(sigma, tau);
          }
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
      }
    }
  }
}

}  // namespace

void enumerate_decorated_maps(int n, int k, const std::function<void(const DecoratedMap&)>& fn) {
  check_sizes(n, k);
  // Permutation part: sigma = identity, tau ranges over S_n.
  for_each_permutation(n, [&](const std::vector<int>& tau) {
    for_each_word(n, k, [&](const std::vector<int>& labels) {
      fn(DecoratedMap{n, k, identity_perm(n), tau, labels});
    });
  });
  // Repeated part: any value may repeat.
  std::vector<int> all_values;
  for (int v = 0; v < n; ++v) all_values.push_back(v);
  for_each_repeat_shape(n, all_values,
                        [&](const std::vector<int>& sigma, const std::vector<int>& tau) {
                          for_each_word(n, k, [&](const std::vector<int>& labels) {
                            fn(DecoratedMap{n, k, sigma, tau, labels});
                          });
                        });
}

void enumerate_H(int n, int k, int b, int e, const std::function<void(const Pathmap&)>& fn) {
  check_sizes(n, k);
  if (b < 0 || b >= n || e < 0 || e >= n) throw ConfigError("path endpoints out of range");
  if (n == 1) return;  // no repeated tau value is possible
  // {tau} = [n] \ {b}: the repeated value v != b and b never occurs.
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
        // avail has exactly n-2 values, matching the free positions.
        do {
          std::vector<int> tau(n, v);
          for (std::size_t i = 0; i < free_pos.size(); ++i) tau[free_pos[i]] = arrangement[i];
          for (int sigma_case = 0; sigma_case < 2; ++sigma_case) {
            std::vector<int> sigma = identity_perm(n);
            if (sigma_case == 1) std::swap(sigma[s], sigma[t]);
            for_each_word(n, k, [&](const std::vector<int>& map_labels) {
              std::vector<int> path_labels = map_labels;
              if (sigma_case == 1) std::swap(path_labels[s], path_labels[t]);
              for_each_word(n - 1, n, [&](const std::vector<int>& interior) {
                std::vector<int> vertices;
                vertices.reserve(n + 1);
                vertices.push_back(v);  // q_1 = repeated tau value
                vertices.insert(vertices.end(), interior.begin(), interior.end());
                vertices.push_back(e);
                DecoratedMap m{n, k, sigma, tau, map_labels};
                DecoratedPath path{n, k, std::move(vertices), path_labels};
                fn(Pathmap{std::move(m), std::move(path)});
              });
            });
          }
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
      }
    }
  }
}

void enumerate_G(int n, int k, int b, int e, const std::function<void(const Pathmap&)>& fn) {
  enumerate_pathmutations(n, k, b, e, [&](const Pathmutation& pm) { fn(as_pathmap(pm)); });
  enumerate_H(n, k, b, e, fn);
}

Int count_decorated_permutations(int n, int k) {
  return factorial(static_cast<unsigned>(n)) * int_pow(k, static_cast<unsigned>(n));
}

Int count_decorated_paths(int n, int k) {
  return int_pow(k, static_cast<unsigned>(n)) * int_pow(n, static_cast<unsigned>(n - 1));
}

Int count_pathmutations(int n, int k) {
  return count_decorated_permutations(n, k) * int_pow(n, static_cast<unsigned>(n - 1));
}

Int count_decorated_maps(int n, int k) {
  return count_decorated_permutations(n, k) * (Int(n) * n - n + 1);
}

Int count_H(int n, int k) { return Int(n - 1) * count_pathmutations(n, k); }

Int count_G(int n, int k) { return Int(n) * count_pathmutations(n, k); }

namespace {

Json one_based(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x + 1);
  return a;
}

}  // namespace

Json to_json(const DecoratedPermutation& p) {
  return Json{{"pi", one_based(p.pi)}, {"labels", one_based(p.labels)}};
}

Json to_json(const DecoratedPath& q) {
  return Json{{"vertices", one_based(q.vertices)}, {"labels", one_based(q.labels)}};
}

Json to_json(const Pathmutation& pm) {
  return Json{{"pi", one_based(pm.perm.pi)},
              {"labels", one_based(pm.perm.labels)},
              {"vertices", one_based(pm.path.vertices)}};
}

Json to_json(const DecoratedMap& m) {
  return Json{{"sigma", one_based(m.sigma)}, {"tau", one_based(m.tau)},
              {"labels", one_based(m.labels)}};
}

Json to_json(const Pathmap& g) {
  return Json{{"sigma", one_based(g.dmap.sigma)},
              {"tau", one_based(g.dmap.tau)},
              {"labels", one_based(g.dmap.labels)},
              {"vertices", one_based(g.path.vertices)},
              {"path_labels", one_based(g.path.labels)}};
}

}  // namespace chv
