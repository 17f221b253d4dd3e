#pragma once

#include <functional>

#include "exgeo/subspace.hpp"
#include "exgeo/wpde/model.hpp"

namespace exgeo::wpde {

template <class K>
struct SolutionSpace {
  std::vector<Poly<K>> basis;  // canonical echelon over the monomial order
  int truncation = 0;
  bool stable = false;
};

// Monomials in the coordinates only (parameters excluded) of weighted degree
// <= N, in map order.
inline std::vector<Mono> monomials_up_to(const std::vector<int>& weights, int ncoords, int arity, int n) {
  std::vector<Mono> out;
  Mono cur(arity, 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == ncoords) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e * weights[var] <= left; ++e) {
      cur[var] = e;
      rec(var + 1, left - e * weights[var]);
    }
    cur[var] = 0;
  };
  rec(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {
template <class K>
Mat<K> kernel_k(const Mat<K>& m) {
  if constexpr (std::is_same_v<K, Rat>)
    return kernel_ff(m);
  else
    return kernel(m);
}
}  // namespace detail

template <class K>
std::vector<Poly<K>> solution_basis_at(const OperatorSystem<K>& sys, int n) {
  const auto& sp = sys.space;
  auto monos = monomials_up_to(sp.weights, sp.ncoords(), sp.arity(), n);
  std::map<Mono, int> mono_index;
  for (size_t i = 0; i < monos.size(); ++i) mono_index[monos[i]] = static_cast<int>(i);

  // rows: (equation, result monomial); columns: candidate monomials
  std::vector<std::map<Mono, std::vector<std::pair<int, K>>>> per_eq(sys.eqs.size());
  for (size_t e = 0; e < sys.eqs.size(); ++e)
    for (size_t c = 0; c < monos.size(); ++c) {
      Poly<K> u;
      u.t[monos[c]] = K(1);
      Poly<K> img = sys.apply_equation(static_cast<int>(e), u);
      for (const auto& [mo, cf] : img.t) per_eq[e][mo].push_back({static_cast<int>(c), cf});
    }
  int rows = 0;
  for (const auto& m : per_eq) rows += static_cast<int>(m.size());
  Mat<K> sys_mat(rows, static_cast<int>(monos.size()));
  int r = 0;
  for (const auto& m : per_eq)
    for (const auto& [mo, entries] : m) {
      for (const auto& [c, cf] : entries) sys_mat.at(r, c) += cf;
      ++r;
    }
  Mat<K> ker = detail::kernel_k(sys_mat);
  // canonical form: echelonize the kernel rows
  Echelon<K> ech(static_cast<int>(monos.size()));
  for (int i = 0; i < ker.rows; ++i) {
    std::vector<K> v(ker.cols);
    for (int j = 0; j < ker.cols; ++j) v[j] = ker.at(i, j);
    ech.add(std::move(v));
  }
  std::vector<Poly<K>> out;
  for (const auto& row : ech.rows) {
    Poly<K> p;
    for (size_t j = 0; j < row.size(); ++j)
      if (!is_zero(row[j])) p.t[monos[j]] = row[j];
    out.push_back(std::move(p));
  }
  return out;
}

// Formal polynomial solutions truncated at weighted degree n; the stable flag
// compares against n+1.
template <class K>
SolutionSpace<K> formal_solutions(const OperatorSystem<K>& sys, int n) {
  if (n < sys.max_order()) throw std::invalid_argument("formal_solutions: truncation below the system order");
  SolutionSpace<K> out;
  out.truncation = n;
  out.basis = solution_basis_at(sys, n);
  auto next = solution_basis_at(sys, n + 1);
  out.stable = next.size() == out.basis.size();
  return out;
}

template <class K>
struct BasisReport {
  bool ok = true;
  int equation = -1, element = -1;  // first failure
  Poly<K> residual;
  bool independent = true;
};

// True iff every equation annihilates every element exactly and the set is
// linearly independent.
template <class K>
BasisReport<K> verify_basis(const OperatorSystem<K>& sys, const std::vector<Poly<K>>& basis) {
  BasisReport<K> rep;
  for (size_t b = 0; b < basis.size(); ++b)
    for (size_t e = 0; e < sys.eqs.size(); ++e) {
      Poly<K> res = sys.apply_equation(static_cast<int>(e), basis[b]);
      if (!res.zero()) {
        rep.ok = false;
        rep.equation = static_cast<int>(e);
        rep.element = static_cast<int>(b);
        rep.residual = std::move(res);
        return rep;
      }
    }
  // independence over the monomial coordinates
  std::map<Mono, int> cols;
  for (const auto& p : basis)
    for (const auto& [mo, cf] : p.t) cols.emplace(mo, 0);
  int c = 0;
  for (auto& [mo, idx] : cols) idx = c++;
  Echelon<K> ech(c);
  for (const auto& p : basis) {
    std::vector<K> v(c, K(0));
    for (const auto& [mo, cf] : p.t) v[cols[mo]] = cf;
    if (!ech.add(std::move(v))) {
      rep.ok = false;
      rep.independent = false;
      return rep;
    }
  }
  return rep;
}

// Span equality of two polynomial families (used to compare a computed basis
// against a published one).
template <class K>
bool same_poly_span(const std::vector<Poly<K>>& a, const std::vector<Poly<K>>& b) {
  std::map<Mono, int> cols;
  for (const auto* fam : {&a, &b})
    for (const auto& p : *fam)
      for (const auto& [mo, cf] : p.t) cols.emplace(mo, 0);
  int c = 0;
  for (auto& [mo, idx] : cols) idx = c++;
  auto ech = [&](const std::vector<Poly<K>>& fam) {
    Echelon<K> e(c);
    for (const auto& p : fam) {
      std::vector<K> v(c, K(0));
      for (const auto& [mo, cf] : p.t) v[cols[mo]] = cf;
      e.add(std::move(v));
    }
    return e;
  };
  return ech(a).same_span(ech(b));
}

}  // namespace exgeo::wpde
