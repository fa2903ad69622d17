#include "chv/matrix.hpp"

#include "chv/error.hpp"

namespace chv {

RingMatrix RingMatrix::identity(int n) {
  RingMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = PolyElem(1);
  return m;
}

namespace {
void check_same_dim(int a, int b) {
  if (a != b) throw ConfigError("matrix dimension mismatch");
}
}  // namespace

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
  check_same_dim(n_, o.n_);
  RingMatrix r(n_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

RingMatrix RingMatrix::operator-(const RingMatrix& o) const {
  check_same_dim(n_, o.n_);
  RingMatrix r(n_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
  check_same_dim(n_, o.n_);
  RingMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const PolyElem& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < n_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

RingMatrix RingMatrix::scaled(const PolyElem& c) const {
  RingMatrix r(n_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
  return r;
}

bool RingMatrix::operator==(const RingMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

bool RingMatrix::is_zero() const {
  for (const auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

bool RingMatrix::is_constant() const {
  for (const auto& p : e_)
    if (!p.is_constant()) return false;
  return true;
}

RingMatrix minor(const RingMatrix& m, int i, int j) {
  if (m.n() < 2) throw ConfigError("minor: matrix must be at least 2 x 2");
  if (i < 0 || i >= m.n() || j < 0 || j >= m.n())
    throw ConfigError("minor: row/column index out of range");
  RingMatrix r(m.n() - 1);
  for (int a = 0, ra = 0; a < m.n(); ++a) {
    if (a == i) continue;
    for (int b = 0, rb = 0; b < m.n(); ++b) {
      if (b == j) continue;
      r(ra, rb) = m(a, b);
      ++rb;
    }
    ++ra;
  }
  return r;
}

int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

namespace {

PolyElem expansion_sum(const RingMatrix& m, bool signed_sum) {
  if (m.n() == 0) return PolyElem(1);
  if (!m.is_constant() && m.n() > 5)
    throw ConfigError("permutation expansion limited to n <= 5 for symbolic matrices");
  PolyElem sum;
  for_each_permutation(m.n(), [&](const std::vector<int>& p) {
    PolyElem prod(1);
    for (int i = 0; i < m.n(); ++i) {
      prod *= m(i, p[i]);
      if (prod.is_zero()) return;
    }
    if (signed_sum && permutation_sign(p) < 0)
      sum -= prod;
    else
      sum += prod;
  });
  return sum;
}

}  // namespace

PolyElem det_expansion(const RingMatrix& m) { return expansion_sum(m, true); }

PolyElem permanent(const RingMatrix& m) { return expansion_sum(m, false); }

PolyElem det_bareiss(const RingMatrix& m) {
  if (!m.is_constant()) throw ConfigError("det_bareiss requires a constant matrix");
  int n = m.n();
  if (n == 0) return PolyElem(1);
  std::vector<Rational> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m(i, j).constant_value();
  auto at = [&](int i, int j) -> Rational& { return a[static_cast<std::size_t>(i) * n + j]; };

  // Fraction-free elimination with row pivoting; prev is the previous pivot.
  int sign = 1;
  Rational prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (at(r, k) != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return PolyElem(0);
      for (int c = 0; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  Rational d = at(n - 1, n - 1);
  if (sign < 0) d = -d;
  return PolyElem(d);
}

PolyElem det(const RingMatrix& m) {
  return m.is_constant() ? det_bareiss(m) : det_expansion(m);
}

}  // namespace chv
