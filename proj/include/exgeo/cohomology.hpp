#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "exgeo/matrix.hpp"
#include "exgeo/repmod.hpp"
#include "exgeo/subspace.hpp"

namespace exgeo {

// Inputs of the graded Chevalley-Eilenberg complex of a negatively graded
// nilpotent algebra with coefficients in a graded module, over a field T.
template <class T>
struct CochainData {
  int gdim = 0;
  std::vector<Rat> gdeg;                            // degrees, all negative
  std::vector<std::vector<std::vector<T>>> gbrk;    // [a][b] -> coords of [x_a,x_b]
  Mat<T> ggram;                                     // positive definite
  int udim = 0;
  std::vector<Rat> udeg;
  std::vector<Mat<T>> uact;                         // action of x_a
  Mat<T> ugram;
};

template <class T>
struct Cochain {
  int q = 1;
  Rat p;
  std::vector<T> coords;  // over the (q,p) block basis
};

// The complex materialized in per-internal-degree blocks for q = 0,1,2 (plus
// the differential out of C^2, so H^2 is available).
template <class T>
struct CochainComplex {
  CochainData<T> d;

  struct C1Idx {
    int a, m;
  };
  struct C2Idx {
    int a, b, m;  // a < b
  };
  struct C3Idx {
    int a, b, c, m;  // a < b < c
  };
  std::vector<C1Idx> c1;
  std::vector<C2Idx> c2;
  std::vector<C3Idx> c3;
  std::map<Rat, std::vector<int>> p0, p1, p2, p3;  // block index lists
  std::map<Rat, Mat<T>> d0, d1, d2;                // differentials per degree p
  std::map<Rat, Mat<T>> g0, g1, g2;                // Gram blocks

  int dim_c(int q, const Rat& p) const {
    const std::map<Rat, std::vector<int>>* m = q == 0 ? &p0 : q == 1 ? &p1 : q == 2 ? &p2 : &p3;
    auto it = m->find(p);
    return it == m->end() ? 0 : static_cast<int>(it->second.size());
  }
  std::vector<Rat> degrees(int q) const {
    const std::map<Rat, std::vector<int>>* m = q == 0 ? &p0 : q == 1 ? &p1 : &p2;
    std::vector<Rat> out;
    for (const auto& [p, _] : *m) out.push_back(p);
    return out;
  }

  const Mat<T>& diff(int q, const Rat& p) const {
    static const Mat<T> empty;
    const std::map<Rat, Mat<T>>* m = q == 0 ? &d0 : q == 1 ? &d1 : &d2;
    auto it = m->find(p);
    return it == m->end() ? empty : it->second;
  }
  const Mat<T>& gram(int q, const Rat& p) const {
    static const Mat<T> empty;
    const std::map<Rat, Mat<T>>* m = q == 0 ? &g0 : q == 1 ? &g1 : &g2;
    auto it = m->find(p);
    return it == m->end() ? empty : it->second;
  }

  // adjoint of diff(q,.): C^{q+1}_p -> C^q_p as G_q^{-1} d^T G_{q+1}
  Mat<T> adjoint_diff(int q, const Rat& p) const {
    int rows = dim_c(q, p), cols = dim_c(q + 1, p);
    if (rows == 0 || cols == 0) return Mat<T>(rows, cols);
    const Mat<T>& dq = diff(q, p);
    auto ginv = inverse(gram(q, p));
    if (!ginv) throw std::logic_error("adjoint_diff: gram block not invertible");
    return (*ginv) * dq.transpose() * gram(q + 1, p);
  }

  Mat<T> laplacian1(const Rat& p) const {
    int n = dim_c(1, p);
    Mat<T> L(n, n);
    if (n == 0) return L;
    if (dim_c(0, p) > 0) L = L + diff(0, p) * adjoint_diff(0, p);
    if (dim_c(2, p) > 0) L = L + adjoint_diff(1, p) * diff(1, p);
    return L;
  }
};

namespace detail {
template <class T>
int rank_t(const Mat<T>& m) {
  if constexpr (std::is_same_v<T, Rat>)
    return rank_ff(m);
  else
    return rank(m);
}
template <class T>
Mat<T> kernel_t(const Mat<T>& m) {
  if constexpr (std::is_same_v<T, Rat>)
    return kernel_ff(m);
  else
    return kernel(m);
}
}  // namespace detail

template <class T>
CochainComplex<T> build_complex(CochainData<T> data) {
  for (const auto& dg : data.gdeg)
    if (sgn(dg) >= 0) throw std::invalid_argument("build_complex: algebra must be negatively graded");
  // degree additivity of the action
  for (int a = 0; a < data.gdim; ++a)
    for (int m = 0; m < data.udim; ++m)
      for (int r = 0; r < data.udim; ++r)
        if (!is_zero(data.uact[a].at(r, m)) && data.udeg[r] != data.udeg[m] + data.gdeg[a])
          throw std::invalid_argument("build_complex: action is not degree-additive");

  CochainComplex<T> cx;
  cx.d = std::move(data);
  const auto& D = cx.d;
  int n = D.gdim, u = D.udim;

  for (int m = 0; m < u; ++m) cx.p0[D.udeg[m]].push_back(m);
  for (int a = 0; a < n; ++a)
    for (int m = 0; m < u; ++m) {
      cx.c1.push_back({a, m});
      cx.p1[D.udeg[m] - D.gdeg[a]].push_back(static_cast<int>(cx.c1.size()) - 1);
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int m = 0; m < u; ++m) {
        cx.c2.push_back({a, b, m});
        cx.p2[D.udeg[m] - D.gdeg[a] - D.gdeg[b]].push_back(static_cast<int>(cx.c2.size()) - 1);
      }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int m = 0; m < u; ++m) {
          cx.c3.push_back({a, b, c, m});
          cx.p3[D.udeg[m] - D.gdeg[a] - D.gdeg[b] - D.gdeg[c]].push_back(static_cast<int>(cx.c3.size()) - 1);
        }

  // local positions within blocks
  std::map<Rat, std::map<int, int>> pos1, pos2, pos3;
  for (auto& [p, v] : cx.p1)
    for (size_t i = 0; i < v.size(); ++i) pos1[p][v[i]] = static_cast<int>(i);
  for (auto& [p, v] : cx.p2)
    for (size_t i = 0; i < v.size(); ++i) pos2[p][v[i]] = static_cast<int>(i);
  for (auto& [p, v] : cx.p3)
    for (size_t i = 0; i < v.size(); ++i) pos3[p][v[i]] = static_cast<int>(i);
  auto c1_flat = [&](int a, int m) { return a * u + m; };
  std::map<std::pair<int, int>, int> wedge2;
  {
    int t = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) wedge2[{a, b}] = t++;
  }
  auto c2_flat = [&](int a, int b, int m) { return wedge2.at({a, b}) * u + m; };

  // d0: (du)(x_a) = x_a . u
  for (auto& [p, cols] : cx.p0) {
    int rows = cx.dim_c(1, p);
    Mat<T> M(rows, static_cast<int>(cols.size()));
    for (size_t cidx = 0; cidx < cols.size(); ++cidx) {
      int m = cols[cidx];
      for (int a = 0; a < n; ++a)
        for (int r = 0; r < u; ++r) {
          const T& v = D.uact[a].at(r, m);
          if (is_zero(v)) continue;
          M.at(pos1[p].at(c1_flat(a, r)), static_cast<int>(cidx)) += v;
        }
    }
    cx.d0[p] = std::move(M);
  }

  // d1: (dc)(x_a,x_b) = x_a.c(x_b) - x_b.c(x_a) - c([x_a,x_b])
  for (auto& [p, cols] : cx.p1) {
    int rows = cx.dim_c(2, p);
    Mat<T> M(rows, static_cast<int>(cols.size()));
    for (size_t cidx = 0; cidx < cols.size(); ++cidx) {
      auto [e, m] = cx.c1[cols[cidx]];
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          // x_a . c(x_b): c(x_b) = delta_{e,b} u_m
          if (b == e)
            for (int r = 0; r < u; ++r) {
              const T& v = D.uact[a].at(r, m);
              if (!is_zero(v)) M.at(pos2[p].at(c2_flat(a, b, r)), static_cast<int>(cidx)) += v;
            }
          if (a == e)
            for (int r = 0; r < u; ++r) {
              const T& v = D.uact[b].at(r, m);
              if (!is_zero(v)) M.at(pos2[p].at(c2_flat(a, b, r)), static_cast<int>(cidx)) -= v;
            }
          const T& br = D.gbrk[a][b][e];
          if (!is_zero(br)) M.at(pos2[p].at(c2_flat(a, b, m)), static_cast<int>(cidx)) -= br;
        }
    }
    cx.d1[p] = std::move(M);
  }

  // d2: (dc)(x,y,z) = x.c(y,z) - y.c(x,z) + z.c(x,y)
  //                   - c([x,y],z) + c([x,z],y) - c([y,z],x)
  std::map<std::tuple<int, int, int>, int> wedge3;
  {
    int t = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) wedge3[{a, b, c}] = t++;
  }
  auto c3_flat = [&](int a, int b, int c, int m) { return wedge3.at({a, b, c}) * u + m; };
  for (auto& [p, cols] : cx.p2) {
    int rows = cx.dim_c(3, p);
    Mat<T> M(rows, static_cast<int>(cols.size()));
    if (rows > 0) {
      for (size_t cidx = 0; cidx < cols.size(); ++cidx) {
        auto [e, f, m] = cx.c2[cols[cidx]];
        // value of the basis cochain on an ordered pair
        auto pair_sign = [&](int a, int b) -> int { return a == e && b == f ? 1 : (a == f && b == e ? -1 : 0); };
        for (int x = 0; x < n; ++x)
          for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
              auto put = [&](int r, const T& v) {
                if (!is_zero(v)) M.at(pos3[p].at(c3_flat(x, y, z, r)), static_cast<int>(cidx)) += v;
              };
              int s;
              if ((s = pair_sign(y, z)) != 0)
                for (int r = 0; r < u; ++r) put(r, s > 0 ? D.uact[x].at(r, m) : T(0) - D.uact[x].at(r, m));
              if ((s = pair_sign(x, z)) != 0)
                for (int r = 0; r < u; ++r) put(r, s > 0 ? T(0) - D.uact[y].at(r, m) : D.uact[y].at(r, m));
              if ((s = pair_sign(x, y)) != 0)
                for (int r = 0; r < u; ++r) put(r, s > 0 ? D.uact[z].at(r, m) : T(0) - D.uact[z].at(r, m));
              for (int w = 0; w < n; ++w) {
                const T& bxy = D.gbrk[x][y][w];
                if (!is_zero(bxy) && (s = pair_sign(w, z)) != 0) put(m, s > 0 ? T(0) - bxy : bxy);
                const T& bxz = D.gbrk[x][z][w];
                if (!is_zero(bxz) && (s = pair_sign(w, y)) != 0) put(m, s > 0 ? bxz : T(0) - bxz);
                const T& byz = D.gbrk[y][z][w];
                if (!is_zero(byz) && (s = pair_sign(w, x)) != 0) put(m, s > 0 ? T(0) - byz : byz);
              }
            }
      }
    }
    cx.d2[p] = std::move(M);
  }

  // gram blocks
  auto gginv_opt = inverse(cx.d.ggram);
  if (!gginv_opt) throw std::invalid_argument("build_complex: algebra gram not invertible");
  Mat<T> gginv = *gginv_opt;
  for (auto& [p, idx] : cx.p0) {
    Mat<T> G(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < idx.size(); ++j) G.at(static_cast<int>(i), static_cast<int>(j)) = cx.d.ugram.at(idx[i], idx[j]);
    cx.g0[p] = std::move(G);
  }
  for (auto& [p, idx] : cx.p1) {
    Mat<T> G(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < idx.size(); ++j) {
        auto [a, m] = cx.c1[idx[i]];
        auto [b, t] = cx.c1[idx[j]];
        G.at(static_cast<int>(i), static_cast<int>(j)) = gginv.at(a, b) * cx.d.ugram.at(m, t);
      }
    cx.g1[p] = std::move(G);
  }
  // Lambda^2 gram and its inverse
  int w2 = static_cast<int>(wedge2.size());
  Mat<T> gl2(w2, w2);
  for (const auto& [ab, i] : wedge2)
    for (const auto& [cd, j] : wedge2) {
      auto [a, b] = ab;
      auto [c, dd] = cd;
      gl2.at(i, j) = cx.d.ggram.at(a, c) * cx.d.ggram.at(b, dd) - cx.d.ggram.at(a, dd) * cx.d.ggram.at(b, c);
    }
  auto gl2inv_opt = inverse(gl2);
  if (!gl2inv_opt) throw std::invalid_argument("build_complex: wedge gram not invertible");
  Mat<T> gl2inv = *gl2inv_opt;
  for (auto& [p, idx] : cx.p2) {
    Mat<T> G(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < idx.size(); ++j) {
        auto [a, b, m] = cx.c2[idx[i]];
        auto [c, dd, t] = cx.c2[idx[j]];
        G.at(static_cast<int>(i), static_cast<int>(j)) = gl2inv.at(wedge2.at({a, b}), wedge2.at({c, dd})) * cx.d.ugram.at(m, t);
      }
    cx.g2[p] = std::move(G);
  }
  return cx;
}

template <class T>
int cohomology_dim(const CochainComplex<T>& cx, int q, const Rat& p) {
  if (q < 0 || q > 2) throw std::invalid_argument("cohomology_dim: q must be 0, 1 or 2");
  int cq = cx.dim_c(q, p);
  if (cq == 0) return 0;
  int rank_out = cx.dim_c(q + 1, p) > 0 ? detail::rank_t(cx.diff(q, p)) : 0;
  int rank_in = 0;
  if (q > 0 && cx.dim_c(q - 1, p) > 0) rank_in = detail::rank_t(cx.diff(q - 1, p));
  return cq - rank_out - rank_in;
}

template <class T>
struct Hodge {
  Mat<T> im_d;       // columns span d(C^{q-1})
  Mat<T> im_dstar;   // columns span d*(C^{q+1})
  Mat<T> harmonic;   // columns span ker Delta
};

template <class T>
Hodge<T> hodge_decompose(const CochainComplex<T>& cx, const Rat& p) {
  // q = 1 block
  int n1 = cx.dim_c(1, p);
  Hodge<T> h;
  h.im_d = Mat<T>(n1, 0);
  h.im_dstar = Mat<T>(n1, 0);
  if (n1 == 0) {
    h.harmonic = Mat<T>(0, 0);
    return h;
  }
  if (cx.dim_c(0, p) > 0) {
    Mat<T> d0 = cx.diff(0, p);
    // reduce the columns of d0 to an independent spanning set
    Mat<T> cols = d0.transpose();  // rows are images of basis vectors
    Echelon<T> e(n1);
    std::vector<std::vector<T>> keep;
    for (int r = 0; r < cols.rows; ++r) {
      std::vector<T> v(cols.cols);
      for (int j = 0; j < cols.cols; ++j) v[j] = cols.at(r, j);
      if (e.add(v)) keep.push_back(v);
    }
    h.im_d = Mat<T>(n1, static_cast<int>(keep.size()));
    for (size_t c = 0; c < keep.size(); ++c)
      for (int r = 0; r < n1; ++r) h.im_d.at(r, static_cast<int>(c)) = keep[c][r];
  }
  if (cx.dim_c(2, p) > 0) {
    Mat<T> ds = cx.adjoint_diff(1, p);  // C^2 -> C^1
    Mat<T> cols = ds.transpose();
    Echelon<T> e(n1);
    std::vector<std::vector<T>> keep;
    for (int r = 0; r < cols.rows; ++r) {
      std::vector<T> v(cols.cols);
      for (int j = 0; j < cols.cols; ++j) v[j] = cols.at(r, j);
      if (e.add(v)) keep.push_back(v);
    }
    h.im_dstar = Mat<T>(n1, static_cast<int>(keep.size()));
    for (size_t c = 0; c < keep.size(); ++c)
      for (int r = 0; r < n1; ++r) h.im_dstar.at(r, static_cast<int>(c)) = keep[c][r];
  }
  Mat<T> L = cx.laplacian1(p);
  Mat<T> ker = detail::kernel_t(L);  // rows are kernel vectors
  h.harmonic = ker.transpose();
  return h;
}

// Orthogonal projection of a C^1_p cochain onto ker Delta.
template <class T>
Cochain<T> harmonic_part(const CochainComplex<T>& cx, const Cochain<T>& c) {
  if (c.q != 1) throw std::invalid_argument("harmonic_part: implemented for 1-cochains");
  int n1 = cx.dim_c(1, c.p);
  if (static_cast<int>(c.coords.size()) != n1) throw std::invalid_argument("harmonic_part: wrong block size");
  Hodge<T> h = hodge_decompose(cx, c.p);
  int k = h.harmonic.cols;
  Cochain<T> out;
  out.q = 1;
  out.p = c.p;
  out.coords.assign(n1, T(0));
  if (k == 0) return out;
  const Mat<T>& G = cx.gram(1, c.p);
  Mat<T> KtG = h.harmonic.transpose() * G;
  Mat<T> A = KtG * h.harmonic;  // k x k
  std::vector<T> rhs = KtG.apply(c.coords);
  auto y = solve(A, rhs);
  if (!y) throw std::logic_error("harmonic_part: projection system is singular");
  out.coords = h.harmonic.apply(*y);
  return out;
}

// Marshals the Rat-world algebra/module pair into cochain data: g_- with the
// -B(.,theta .) product, U with its contravariant Gram.
CochainData<Rat> cochain_data(const GradedLieAlgebra& g, const GradedModule& u);

}  // namespace exgeo
