#include "exgeo/prolong.hpp"

#include <algorithm>
#include <stdexcept>

namespace exgeo {

std::map<Rat, int> GradedSubspace::dims_by_degree() const {
  std::map<Rat, int> d;
  for (const auto& e : elems) d[e.degree] += 1;
  return d;
}

std::map<Rat, std::vector<int>> GradedSubspace::indices_by_degree() const {
  std::map<Rat, std::vector<int>> d;
  for (size_t i = 0; i < elems.size(); ++i) d[elems[i].degree].push_back(static_cast<int>(i));
  return d;
}

std::vector<Rat> flatten(const Mat<Rat>& m) { return m.a; }

Rat GradedAmbient::max_degree() const {
  Rat mx(0);
  for (const auto& [d, _] : gl_pairs)
    if (d > mx) mx = d;
  return mx;
}

int GradedAmbient::block_dim(const Rat& d) const {
  auto it = gl_pairs.find(d);
  if (it == gl_pairs.end()) return 0;
  if (!restricted) return static_cast<int>(it->second.size());
  auto bt = sub_basis.find(d);
  return bt == sub_basis.end() ? 0 : bt->second.rows;
}

Mat<Rat> GradedAmbient::block_element(const Rat& d, int k) const {
  Mat<Rat> m(n, n);
  const auto& pairs = gl_pairs.at(d);
  if (!restricted) {
    m.at(pairs[k].first, pairs[k].second) = 1;
    return m;
  }
  const Mat<Rat>& b = sub_basis.at(d);
  for (size_t t = 0; t < pairs.size(); ++t) m.at(pairs[t].first, pairs[t].second) = b.at(k, static_cast<int>(t));
  return m;
}

int GradedAmbient::dim() const {
  int s = 0;
  for (const auto& [d, _] : gl_pairs) s += block_dim(d);
  return s;
}

bool GradedAmbient::contains(const Rat& d, const Mat<Rat>& m) const {
  int bd = block_dim(d);
  Echelon<Rat> e(n * n);
  for (int k = 0; k < bd; ++k) e.add(flatten(block_element(d, k)));
  return e.contains(flatten(m));
}

GradedAmbient ambient_gl(const GradedModule& v) {
  if (v.degrees.empty()) throw std::invalid_argument("ambient_gl: module must be graded");
  GradedAmbient a;
  a.n = v.dim;
  a.vdeg = v.degrees;
  for (int u = 0; u < v.dim; ++u)
    for (int w = 0; w < v.dim; ++w) a.gl_pairs[v.degrees[u] - v.degrees[w]].push_back({u, w});
  return a;
}

Mat<Rat> invariant_symmetric_form(const GradedModule& v) {
  int n = v.dim;
  int nsym = n * (n + 1) / 2;
  auto sym_index = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    return i * n + j - i * (i + 1) / 2;
  };
  std::vector<std::vector<Rat>> rows;
  for (int b = 0; b < v.g->dim(); ++b) {
    const Mat<Rat>& R = v.act(b);
    // rho^T K + K rho = 0, K symmetric
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        std::vector<Rat> row(nsym, Rat(0));
        for (int k = 0; k < n; ++k) {
          if (!is_zero(R.at(k, i))) row[sym_index(k, j)] += R.at(k, i);
          if (!is_zero(R.at(k, j))) row[sym_index(i, k)] += R.at(k, j);
        }
        rows.push_back(std::move(row));
      }
  }
  Mat<Rat> sys(static_cast<int>(rows.size()), nsym);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < nsym; ++c) sys.at(static_cast<int>(r), c) = rows[r][c];
  Mat<Rat> ker = kernel_ff(sys);
  if (ker.rows != 1)
    throw std::invalid_argument("invariant_symmetric_form: invariant symmetric form space has dimension " +
                                std::to_string(ker.rows));
  Mat<Rat> K(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      K.at(i, j) = ker.at(0, sym_index(i, j));
      K.at(j, i) = K.at(i, j);
    }
  return K;
}

GradedAmbient ambient_o(const GradedModule& v) { return ambient_o(v, invariant_symmetric_form(v)); }

GradedAmbient ambient_o(const GradedModule& v, const Mat<Rat>& kappa) {
  GradedAmbient a = ambient_gl(v);
  a.restricted = true;
  int n = v.dim;
  for (auto& [d, pairs] : a.gl_pairs) {
    int k = static_cast<int>(pairs.size());
    // rows: entries of A^T kappa + kappa A over the block coordinates
    Mat<Rat> sys(n * n, k);
    for (int t = 0; t < k; ++t) {
      auto [u, w] = pairs[t];
      // A = E_uw contributes: (A^T kappa)_{w j} = kappa_{u j}; (kappa A)_{i w} = kappa_{i u}
      for (int j = 0; j < n; ++j) sys.at(w * n + j, t) += kappa.at(u, j);
      for (int i = 0; i < n; ++i) sys.at(i * n + w, t) += kappa.at(i, u);
    }
    a.sub_basis[d] = kernel_ff(sys);
  }
  return a;
}

GradedSubspace algebra_image(const GradedModule& v) {
  GradedSubspace s;
  s.n = v.dim;
  for (int b = 0; b < v.g->dim(); ++b) {
    if (v.act(b).is_zero_mat()) continue;
    s.elems.push_back({v.g->basis[b].degree, v.act(b)});
  }
  return s;
}

GradedSubspace negative_image(const GradedModule& v) {
  GradedSubspace s;
  s.n = v.dim;
  for (int b : v.g->negative_indices()) s.elems.push_back({v.g->basis[b].degree, v.act(b)});
  return s;
}

GradedSubspace relative_prolongation(const GradedSubspace& g_minus, const GradedAmbient& l) {
  int n = l.n;
  int nn = n * n;
  // validate: g_- graded, inside l, bracket-closed
  Echelon<Rat> neg_span(nn);
  for (const auto& e : g_minus.elems) {
    if (sgn(e.degree) >= 0) throw std::invalid_argument("relative_prolongation: g_- must be negatively graded");
    if (!l.contains(e.degree, e.mat)) throw std::invalid_argument("relative_prolongation: g_- is not inside l");
    neg_span.add(flatten(e.mat));
  }
  for (const auto& x : g_minus.elems)
    for (const auto& y : g_minus.elems) {
      Mat<Rat> br = commutator(x.mat, y.mat);
      if (!br.is_zero_mat() && !neg_span.contains(flatten(br)))
        throw std::invalid_argument("relative_prolongation: g_- is not bracket-closed");
    }

  GradedSubspace out = g_minus;
  std::map<Rat, Echelon<Rat>> span_by_degree;
  for (const auto& e : g_minus.elems) {
    auto it = span_by_degree.find(e.degree);
    if (it == span_by_degree.end()) it = span_by_degree.emplace(e.degree, Echelon<Rat>(nn)).first;
    it->second.add(flatten(e.mat));
  }

  Rat top = l.max_degree();
  for (Rat p(0); p <= top; p += 1) {
    int bd = l.block_dim(p);
    if (bd == 0) continue;
    std::vector<Mat<Rat>> block;
    for (int k = 0; k < bd; ++k) block.push_back(l.block_element(p, k));
    // constraints: [A, x] lies in the already-known span at degree p + deg x
    std::vector<std::vector<Rat>> rows;
    for (const auto& x : g_minus.elems) {
      Rat tgt = p + x.degree;
      const Echelon<Rat>* sp = nullptr;
      auto it = span_by_degree.find(tgt);
      if (it != span_by_degree.end()) sp = &it->second;
      std::vector<std::vector<Rat>> reduced(bd);
      for (int k = 0; k < bd; ++k) {
        auto fl = flatten(commutator(block[k], x.mat));
        reduced[k] = sp ? sp->reduce(std::move(fl)) : std::move(fl);
      }
      for (int coord = 0; coord < nn; ++coord) {
        bool nonzero = false;
        for (int k = 0; k < bd; ++k)
          if (!is_zero(reduced[k][coord])) {
            nonzero = true;
            break;
          }
        if (!nonzero) continue;
        std::vector<Rat> row(bd);
        for (int k = 0; k < bd; ++k) row[k] = reduced[k][coord];
        rows.push_back(std::move(row));
      }
    }
    Mat<Rat> sys(static_cast<int>(rows.size()), bd);
    for (size_t r = 0; r < rows.size(); ++r)
      for (int c = 0; c < bd; ++c) sys.at(static_cast<int>(r), c) = rows[r][c];
    Mat<Rat> ker = rows.empty() ? Mat<Rat>::identity(bd) : kernel_ff(sys);
    if (ker.rows == 0) continue;
    auto& sp = span_by_degree.emplace(p, Echelon<Rat>(nn)).first->second;
    for (int r = 0; r < ker.rows; ++r) {
      Mat<Rat> m(n, n);
      for (int k = 0; k < bd; ++k)
        if (!is_zero(ker.at(r, k))) m = m + ker.at(r, k) * block[k];
      sp.add(flatten(m));
      out.elems.push_back({p, std::move(m)});
    }
  }
  return out;
}

GradedSubspace centralizer(const std::vector<Mat<Rat>>& generators, const GradedAmbient& gl) {
  int n = gl.n;
  int nn = n * n;
  Mat<Rat> sys(static_cast<int>(generators.size()) * nn, nn);
  int row0 = 0;
  for (const auto& G : generators) {
    // A G - G A = 0; unknowns A_{uv} at column u*n+v
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          if (!is_zero(G.at(k, j))) sys.at(row0 + i * n + j, i * n + k) += G.at(k, j);
          if (!is_zero(G.at(i, k))) sys.at(row0 + i * n + j, k * n + j) -= G.at(i, k);
        }
      }
    row0 += nn;
  }
  Mat<Rat> ker = kernel_ff(sys);
  // split by gl degree and re-echelonize per degree
  std::map<Rat, Echelon<Rat>> per_degree;
  for (int r = 0; r < ker.rows; ++r) {
    std::map<Rat, Mat<Rat>> comp;
    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w) {
        const Rat& c = ker.at(r, u * n + w);
        if (is_zero(c)) continue;
        Rat d = gl.vdeg[u] - gl.vdeg[w];
        auto it = comp.find(d);
        if (it == comp.end()) it = comp.emplace(d, Mat<Rat>(n, n)).first;
        it->second.at(u, w) = c;
      }
    for (auto& [d, m] : comp) {
      auto it = per_degree.find(d);
      if (it == per_degree.end()) it = per_degree.emplace(d, Echelon<Rat>(nn)).first;
      it->second.add(flatten(m));
    }
  }
  GradedSubspace out;
  out.n = n;
  for (auto& [d, ech] : per_degree)
    for (const auto& row : ech.rows) {
      Mat<Rat> m(n, n);
      m.a = row;
      out.elems.push_back({d, std::move(m)});
    }
  return out;
}

GradedSubspace trace_complement(const GradedSubspace& sub, const GradedAmbient& l) {
  int n = l.n;
  auto sub_by_deg = sub.indices_by_degree();
  GradedSubspace out;
  out.n = n;
  for (const auto& [d, pairs] : l.gl_pairs) {
    int bd = l.block_dim(d);
    if (bd == 0) continue;
    std::vector<Mat<Rat>> block;
    for (int k = 0; k < bd; ++k) block.push_back(l.block_element(d, k));
    Rat opp = -d;
    std::vector<int> duals;
    if (auto it = sub_by_deg.find(opp); it != sub_by_deg.end()) duals = it->second;
    Mat<Rat> sys(static_cast<int>(duals.size()), bd);
    for (size_t r = 0; r < duals.size(); ++r) {
      const Mat<Rat>& S = sub.elems[duals[r]].mat;
      for (int k = 0; k < bd; ++k) sys.at(static_cast<int>(r), k) = (block[k] * S).trace();
    }
    Mat<Rat> ker = duals.empty() ? Mat<Rat>::identity(bd) : kernel_ff(sys);
    for (int r = 0; r < ker.rows; ++r) {
      Mat<Rat> m(n, n);
      for (int k = 0; k < bd; ++k)
        if (!is_zero(ker.at(r, k))) m = m + ker.at(r, k) * block[k];
      out.elems.push_back({d, std::move(m)});
    }
  }
  // genuine direct-sum check: sub + complement must span the ambient
  Echelon<Rat> total(n * n);
  for (const auto& e : sub.elems) total.add(flatten(e.mat));
  for (const auto& e : out.elems) total.add(flatten(e.mat));
  if (out.dim() + sub.dim() != l.dim() || total.dim() != l.dim())
    throw std::invalid_argument("trace_complement: trace form degenerate on the subspace");
  return out;
}

GradedSubspace direct_sum(const GradedSubspace& a, const GradedSubspace& b) {
  GradedSubspace out = a;
  out.elems.insert(out.elems.end(), b.elems.begin(), b.elems.end());
  return out;
}

bool same_graded_span(const GradedSubspace& a, const GradedSubspace& b) {
  if (a.n != b.n) return false;
  int nn = a.n * a.n;
  Echelon<Rat> ea(nn), eb(nn);
  for (const auto& e : a.elems) ea.add(flatten(e.mat));
  for (const auto& e : b.elems) eb.add(flatten(e.mat));
  return ea.same_span(eb);
}

GradedModule matrix_subspace_module(const GPtr& g, const GradedModule& v, const GradedSubspace& u) {
  int n = v.dim;
  int nn = n * n;
  int du = u.dim();
  GradedModule m;
  m.g = g;
  m.dim = du;
  m.shift = 0;
  for (const auto& e : u.elems) m.degrees.push_back(e.degree);

  // coordinate extraction: rref of [B | I] where B's columns are the basis
  Mat<Rat> aug(nn, du + nn);
  for (int c = 0; c < du; ++c) {
    auto fl = flatten(u.elems[c].mat);
    for (int r = 0; r < nn; ++r) aug.at(r, c) = fl[r];
  }
  for (int r = 0; r < nn; ++r) aug.at(r, du + r) = 1;
  std::vector<int> piv = rref(aug);
  std::vector<int> pivot_rows(du, -1);
  for (size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] >= du) break;
    pivot_rows[piv[r]] = static_cast<int>(r);
  }
  for (int c = 0; c < du; ++c)
    if (pivot_rows[c] < 0) throw std::invalid_argument("matrix_subspace_module: basis is linearly dependent");
  Mat<Rat> extract(du, nn);  // coords = extract * flat
  for (int c = 0; c < du; ++c)
    for (int r = 0; r < nn; ++r) extract.at(c, r) = aug.at(pivot_rows[c], du + r);

  auto coords_of = [&](const Mat<Rat>& w) {
    auto fl = flatten(w);
    std::vector<Rat> x = extract.apply(fl);
    // consistency: residual must vanish
    Mat<Rat> rec(n, n);
    for (int c = 0; c < du; ++c)
      if (!is_zero(x[c])) rec = rec + x[c] * u.elems[c].mat;
    if (!(rec == w)) throw std::invalid_argument("matrix_subspace_module: subspace is not invariant");
    return x;
  };

  for (int b = 0; b < g->dim(); ++b) {
    Mat<Rat> M(du, du);
    for (int c = 0; c < du; ++c) {
      auto x = coords_of(commutator(v.act(b), u.elems[c].mat));
      for (int r = 0; r < du; ++r) M.at(r, c) = x[r];
    }
    m.action.push_back(std::move(M));
  }

  // Gram: <A,B> = tr(A B*) with B* = Gv^{-1} B^T Gv
  auto gv_inv = inverse(v.gram);
  if (!gv_inv) throw std::logic_error("matrix_subspace_module: module gram is singular");
  m.gram = Mat<Rat>(du, du);
  std::vector<Mat<Rat>> stars;
  for (int c = 0; c < du; ++c) stars.push_back((*gv_inv) * u.elems[c].mat.transpose() * v.gram);
  for (int a = 0; a < du; ++a)
    for (int b = a; b < du; ++b) {
      Rat t = (u.elems[a].mat * stars[b]).trace();
      m.gram.at(a, b) = t;
      m.gram.at(b, a) = t;
    }
  return m;
}

}  // namespace exgeo
