#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "exgeo/rational.hpp"

namespace exgeo {

template <class T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, T(0)) {}

  T& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const T& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  Mat transpose() const {
    Mat m(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    assert(x.cols == y.rows);
    Mat m(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const T& v = x.at(i, k);
        if (is_zero(v)) continue;
        for (int j = 0; j < y.cols; ++j) m.at(i, j) += v * y.at(k, j);
      }
    return m;
  }
  friend Mat operator+(const Mat& x, const Mat& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    Mat m = x;
    for (size_t i = 0; i < m.a.size(); ++i) m.a[i] += y.a[i];
    return m;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    Mat m = x;
    for (size_t i = 0; i < m.a.size(); ++i) m.a[i] -= y.a[i];
    return m;
  }
  friend Mat operator*(const T& s, const Mat& y) {
    Mat m = y;
    for (auto& v : m.a) v *= s;
    return m;
  }
  Mat operator-() const {
    Mat m = *this;
    for (auto& v : m.a) v = T(0) - v;
    return m;
  }
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  std::vector<T> apply(const std::vector<T>& v) const {
    assert(static_cast<int>(v.size()) == cols);
    std::vector<T> r(rows, T(0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (!is_zero(at(i, j))) r[i] += at(i, j) * v[j];
    return r;
  }

  bool is_zero_mat() const {
    for (const auto& v : a)
      if (!is_zero(v)) return false;
    return true;
  }

  T trace() const {
    assert(rows == cols);
    T t(0);
    for (int i = 0; i < rows; ++i) t += at(i, i);
    return t;
  }

  friend Mat commutator(const Mat& x, const Mat& y) { return x * y - y * x; }
};

// In-place reduced row echelon form over a field; returns pivot columns.
template <class T>
std::vector<int> rref(Mat<T>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (!is_zero(m.at(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    T inv = T(1) / m.at(r, c);
    for (int j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || is_zero(m.at(i, c))) continue;
      T f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
int rank(Mat<T> m) {
  return static_cast<int>(rref(m).size());
}

// Kernel basis (as rows) of m x = 0.
template <class T>
Mat<T> kernel(Mat<T> m) {
  std::vector<int> piv = rref(m);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  Mat<T> ker(static_cast<int>(free_cols.size()), m.cols);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    ker.at(static_cast<int>(k), fc) = T(1);
    for (size_t r = 0; r < piv.size(); ++r) ker.at(static_cast<int>(k), piv[r]) = T(0) - m.at(static_cast<int>(r), fc);
  }
  return ker;
}

// Solves m x = b; returns nullopt when inconsistent. Free variables are set to zero.
template <class T>
std::optional<std::vector<T>> solve(Mat<T> m, const std::vector<T>& b) {
  assert(static_cast<int>(b.size()) == m.rows);
  Mat<T> aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<int> piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
  std::vector<T> x(m.cols, T(0));
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(static_cast<int>(r), m.cols);
  return x;
}

template <class T>
std::optional<Mat<T>> inverse(const Mat<T>& m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  if (n == 0) return Mat<T>(0, 0);
  Mat<T> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = T(1);
  }
  std::vector<int> piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  Mat<T> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

template <class T>
T det(Mat<T> m) {
  assert(m.rows == m.cols);
  T d(1);
  int n = m.rows;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!is_zero(m.at(i, c))) {
        p = i;
        break;
      }
    if (p < 0) return T(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = T(0) - d;
    }
    d *= m.at(c, c);
    T inv = T(1) / m.at(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (is_zero(m.at(i, c))) continue;
      T f = m.at(i, c) * inv;
      for (int j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

// --- fraction-free path for Rat matrices -------------------------------------
//
// Rank and kernel via integer Bareiss elimination: rows are scaled to integers,
// then one-step fraction-free elimination keeps every intermediate entry a
// minor of the scaled matrix. Used by the cohomology ranks where plain
// rational elimination can blow up coefficient sizes.

struct BareissEchelon {
  std::vector<std::vector<Int>> rows;  // echelon rows (not reduced)
  std::vector<int> pivot_cols;
  int cols = 0;
};

inline BareissEchelon bareiss_echelon(const Mat<Rat>& m) {
  BareissEchelon e;
  e.cols = m.cols;
  std::vector<std::vector<Int>> w;
  w.reserve(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    Int l(1);
    for (int j = 0; j < m.cols; ++j) l = lcm(l, m.at(i, j).get_den());
    std::vector<Int> row(m.cols);
    bool nz = false;
    for (int j = 0; j < m.cols; ++j) {
      row[j] = m.at(i, j).get_num() * (l / m.at(i, j).get_den());
      if (row[j] != 0) nz = true;
    }
    if (nz) w.push_back(std::move(row));
  }
  Int prev(1);
  size_t r = 0;
  for (int c = 0; c < m.cols && r < w.size(); ++c) {
    // pick the nonzero pivot with smallest absolute value to limit growth
    int p = -1;
    for (size_t i = r; i < w.size(); ++i) {
      if (w[i][c] == 0) continue;
      if (p < 0 || cmp(abs(w[i][c]), abs(w[p][c])) < 0) p = static_cast<int>(i);
    }
    if (p < 0) continue;
    std::swap(w[r], w[p]);
    for (size_t i = r + 1; i < w.size(); ++i) {
      for (int j = c + 1; j < m.cols; ++j) w[i][j] = (w[r][c] * w[i][j] - w[i][c] * w[r][j]) / prev;
      w[i][c] = 0;
    }
    prev = w[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  w.resize(r);
  e.rows = std::move(w);
  return e;
}

inline int rank_ff(const Mat<Rat>& m) { return static_cast<int>(bareiss_echelon(m).pivot_cols.size()); }

// Kernel basis from a Bareiss echelon by rational back-substitution.
inline Mat<Rat> kernel_ff(const Mat<Rat>& m) {
  BareissEchelon e = bareiss_echelon(m);
  int nr = static_cast<int>(e.rows.size());
  std::vector<bool> is_piv(e.cols, false);
  for (int c : e.pivot_cols) is_piv[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < e.cols; ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  Mat<Rat> ker(static_cast<int>(free_cols.size()), e.cols);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    ker.at(static_cast<int>(k), fc) = 1;
    for (int r = nr - 1; r >= 0; --r) {
      int pc = e.pivot_cols[r];
      Rat s(0);
      for (int j = pc + 1; j < e.cols; ++j) {
        if (e.rows[r][j] == 0) continue;
        const Rat& xv = ker.at(static_cast<int>(k), j);
        if (is_zero(xv)) continue;
        s += Rat(e.rows[r][j]) * xv;
      }
      ker.at(static_cast<int>(k), pc) = -s / Rat(e.rows[r][pc]);
    }
  }
  return ker;
}

}  // namespace exgeo
