#pragma once

#include <vector>

#include "exgeo/matrix.hpp"

namespace exgeo {

// Subspace maintained in reduced row-echelon form: the canonical representation
// used throughout for span comparisons and coordinate extraction.
template <class T>
struct Echelon {
  int cols = 0;
  std::vector<std::vector<T>> rows;  // reduced rows
  std::vector<int> pivots;           // pivot column per row, increasing

  Echelon() = default;
  explicit Echelon(int n) : cols(n) {}

  int dim() const { return static_cast<int>(rows.size()); }

  // Reduces v against the current rows; returns the residual.
  std::vector<T> reduce(std::vector<T> v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      const T& x = v[pivots[r]];
      if (is_zero(x)) continue;
      T f = x;
      for (int j = 0; j < cols; ++j) v[j] -= f * rows[r][j];
    }
    return v;
  }

  bool contains(const std::vector<T>& v) const {
    auto r = reduce(v);
    for (const auto& x : r)
      if (!is_zero(x)) return false;
    return true;
  }

  // Adds v to the span; returns true when the dimension grew.
  bool add(std::vector<T> v) {
    v = reduce(std::move(v));
    int p = -1;
    for (int j = 0; j < cols; ++j)
      if (!is_zero(v[j])) {
        p = j;
        break;
      }
    if (p < 0) return false;
    T inv = T(1) / v[p];
    for (int j = 0; j < cols; ++j) v[j] = v[j] * inv;
    // back-substitute into existing rows, then insert keeping pivot order
    for (size_t r = 0; r < rows.size(); ++r) {
      T f = rows[r][p];
      if (is_zero(f)) continue;
      for (int j = 0; j < cols; ++j) rows[r][j] -= f * v[j];
    }
    size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < p) ++pos;
    rows.insert(rows.begin() + pos, std::move(v));
    pivots.insert(pivots.begin() + pos, p);
    return true;
  }

  // Coordinates of v in terms of an explicit spanning set must be solved
  // externally; this class only answers membership/span questions.

  bool same_span(const Echelon& o) const { return cols == o.cols && pivots == o.pivots && rows == o.rows; }
};

template <class T>
Echelon<T> echelon_span(const std::vector<std::vector<T>>& vecs, int ncols) {
  Echelon<T> e(ncols);
  for (const auto& v : vecs) e.add(v);
  return e;
}

}  // namespace exgeo
