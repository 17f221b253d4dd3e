#include "exgeo/gradedlie.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace exgeo {

namespace {

using RootVec = std::vector<int>;

RootVec add(const RootVec& a, const RootVec& b) {
  RootVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
RootVec sub(const RootVec& a, const RootVec& b) {
  RootVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
RootVec neg(const RootVec& a) {
  RootVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}
bool is_zero_vec(const RootVec& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}
int vsign(const RootVec& a) {
  for (int x : a) {
    if (x > 0) return 1;
    if (x < 0) return -1;
  }
  return 0;
}

// Chevalley structure constants N_{alpha,beta} on positive-root pairs.
// Extraspecial pairs are pinned to N = +(p+1); the rest follows from the
// Jacobi identity on (e_{-eps}, e_alpha, e_beta) and the length relation
// N_{x,y}/(z,z) = N_{y,z}/(x,x) on triples x+y+z = 0.
struct ChevalleyN {
  const RootSystem& rs;
  std::map<RootVec, int> pos_index;
  std::map<std::pair<RootVec, RootVec>, Rat> table;  // positive pairs with root sum

  explicit ChevalleyN(const RootSystem& r) : rs(r) {
    for (size_t i = 0; i < rs.positive_roots.size(); ++i) pos_index[rs.positive_roots[i]] = static_cast<int>(i);
    build();
  }

  bool is_root(const RootVec& v) const {
    if (is_zero_vec(v)) return false;
    int s = vsign(v);
    return pos_index.count(s > 0 ? v : neg(v)) > 0;
  }

  Rat norm(const RootVec& v) const {
    std::vector<Rat> u(v.begin(), v.end());
    return rs.ip_alpha(u, u);
  }

  int string_down(const RootVec& beta, const RootVec& alpha) const {
    int p = 0;
    RootVec v = beta;
    while (true) {
      v = sub(v, alpha);
      if (!is_root(v)) break;
      ++p;
    }
    return p;
  }

  // first simple index (0-based) whose root can be split off gamma
  int extraspecial_simple(const RootVec& gamma) const {
    for (int i = 0; i < rs.rank; ++i) {
      RootVec e(rs.rank, 0);
      e[i] = 1;
      RootVec rest = sub(gamma, e);
      if (vsign(rest) > 0 && pos_index.count(rest)) return i;
    }
    throw std::logic_error("no simple summand found for a non-simple positive root");
  }

  Rat npos(const RootVec& a, const RootVec& b) const {
    auto it = table.find({a, b});
    if (it == table.end()) throw std::logic_error("missing structure constant");
    return it->second;
  }

  // N for arbitrary signed roots whose sum is a root
  Rat nany(const RootVec& a, const RootVec& b) const {
    int sa = vsign(a), sb = vsign(b);
    if (sa > 0 && sb > 0) return npos(a, b);
    if (sa < 0 && sb < 0) return -nany(neg(a), neg(b));
    if (sa < 0) return -nany(b, a);
    // a positive, b negative
    RootVec s = add(a, b);
    if (vsign(s) > 0) return norm(s) / norm(a) * nany(b, neg(s));
    return norm(s) / norm(b) * nany(neg(s), a);
  }

  void build() {
    for (const RootVec& gamma : rs.positive_roots) {
      if (rs.root_height(gamma) < 2) continue;
      int si = extraspecial_simple(gamma);
      RootVec eps(rs.rank, 0);
      eps[si] = 1;
      RootVec eta = sub(gamma, eps);
      int p = string_down(eta, eps);
      Rat n_eps_eta(p + 1);
      table[{eps, eta}] = n_eps_eta;
      table[{eta, eps}] = -n_eps_eta;
      Rat n_negeps_gamma = norm(eta) / norm(gamma) * n_eps_eta;

      for (const RootVec& alpha : rs.positive_roots) {
        RootVec beta = sub(gamma, alpha);
        if (vsign(beta) <= 0 || !pos_index.count(beta)) continue;
        if (alpha == eps || beta == eps) continue;  // the extraspecial pair, already set
        if (table.count({alpha, beta})) continue;
        // Jacobi on (e_{-eps}, e_alpha, e_beta):
        //   N_{alpha,beta} N_{-eps,gamma} + N_{beta,-eps} N_{alpha,beta-eps}
        //                                 + N_{-eps,alpha} N_{beta,alpha-eps} = 0
        Rat acc(0);
        RootVec bme = sub(beta, eps);
        if (is_root(bme)) {
          // N_{beta,-eps} = -N_{-eps,beta} = -(delta,delta)/(beta,beta) N_{eps,delta}
          Rat n_beta_negeps = -(norm(bme) / norm(beta)) * npos(eps, bme);
          acc += n_beta_negeps * npos(alpha, bme);
        }
        RootVec ame = sub(alpha, eps);
        if (is_root(ame)) {
          Rat n_negeps_alpha = (norm(ame) / norm(alpha)) * npos(eps, ame);
          acc += n_negeps_alpha * npos(beta, ame);
        }
        Rat n = -acc / n_negeps_gamma;
        table[{alpha, beta}] = n;
        table[{beta, alpha}] = -n;
      }
    }
  }
};

}  // namespace

std::vector<Rat> GradedLieAlgebra::bracket_vec(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
  std::vector<Rat> r(dim(), Rat(0));
  for (int i = 0; i < dim(); ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < dim(); ++j) {
      if (is_zero(y[j])) continue;
      for (const auto& [k, c] : brk[i][j]) r[k] += x[i] * y[j] * c;
    }
  }
  return r;
}

Rat GradedLieAlgebra::weight_degree(const std::vector<Rat>& omega_coords) const {
  if (grading_element.empty()) throw std::logic_error("weight_degree: algebra is ungraded");
  Rat s(0);
  // omega_i(E) = t_i for E = sum t_i h_i
  for (int i = 0; i < rs.rank; ++i) s += omega_coords[i] * grading_element[i];
  return s;
}

std::vector<int> GradedLieAlgebra::indices_of_degree(const Rat& p) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (basis[i].degree == p) out.push_back(i);
  return out;
}

std::vector<int> GradedLieAlgebra::negative_indices() const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (sgn(basis[i].degree) < 0) out.push_back(i);
  std::stable_sort(out.begin(), out.end(), [&](int a, int b) { return basis[a].degree < basis[b].degree; });
  return out;
}

Rat GradedLieAlgebra::min_degree() const {
  Rat m(0);
  for (const auto& b : basis) m = std::min(m, b.degree);
  return m;
}
Rat GradedLieAlgebra::max_degree() const {
  Rat m(0);
  for (const auto& b : basis) m = std::max(m, b.degree);
  return m;
}

GradedLieAlgebra chevalley_algebra(const RootSystem& rs) {
  GradedLieAlgebra g;
  g.rs = rs;
  int l = rs.rank;
  int m = static_cast<int>(rs.positive_roots.size());
  int dim = l + 2 * m;

  ChevalleyN N(rs);

  g.basis.resize(dim);
  for (int i = 0; i < l; ++i) {
    auto& b = g.basis[i];
    b.kind = LieBasisElem::Kind::Cartan;
    b.cartan_index = i;
  }
  // positions of simple roots inside positive_roots
  std::vector<int> simple_pos(l, -1);
  for (int r = 0; r < m; ++r) {
    const auto& root = rs.positive_roots[r];
    if (rs.root_height(root) == 1) {
      for (int i = 0; i < l; ++i)
        if (root[i] == 1) simple_pos[i] = r;
    }
  }
  for (int r = 0; r < m; ++r) {
    auto& e = g.basis[g.e_index(r)];
    e.kind = LieBasisElem::Kind::EPos;
    e.root = rs.positive_roots[r];
    auto& f = g.basis[g.f_index(r)];
    f.kind = LieBasisElem::Kind::ENeg;
    f.root = rs.positive_roots[r];
  }
  for (int i = 0; i < l; ++i) {
    auto& b = g.basis[i];
    b.rec_x = g.e_index(simple_pos[i]);
    b.rec_y = g.f_index(simple_pos[i]);
    b.rec_scale = 1;
  }
  for (int r = 0; r < m; ++r) {
    const auto& root = rs.positive_roots[r];
    if (rs.root_height(root) == 1) {
      for (int i = 0; i < l; ++i)
        if (root[i] == 1) {
          g.basis[g.e_index(r)].simple_index = i;
          g.basis[g.f_index(r)].simple_index = i;
        }
      continue;
    }
    int si = N.extraspecial_simple(root);
    RootVec eps(l, 0);
    eps[si] = 1;
    RootVec eta = sub(root, eps);
    Rat n = N.npos(eps, eta);
    int eps_pos = N.pos_index.at(eps), eta_pos = N.pos_index.at(eta);
    auto& e = g.basis[g.e_index(r)];
    e.rec_x = g.e_index(eps_pos);
    e.rec_y = g.e_index(eta_pos);
    e.rec_scale = Rat(1) / n;
    auto& f = g.basis[g.f_index(r)];
    f.rec_x = g.f_index(eps_pos);
    f.rec_y = g.f_index(eta_pos);
    f.rec_scale = Rat(-1) / n;
  }

  // bracket table
  g.brk.assign(dim, std::vector<SparseVec>(dim));
  auto signed_root = [&](int idx) -> RootVec {
    const auto& b = g.basis[idx];
    return b.kind == LieBasisElem::Kind::EPos ? b.root : neg(b.root);
  };
  auto root_basis_index = [&](const RootVec& v) -> int {
    int s = vsign(v);
    int pos = N.pos_index.at(s > 0 ? v : neg(v));
    return s > 0 ? g.e_index(pos) : g.f_index(pos);
  };
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (i == j) continue;
      const auto& bi = g.basis[i];
      const auto& bj = g.basis[j];
      SparseVec out;
      if (bi.kind == LieBasisElem::Kind::Cartan && bj.kind == LieBasisElem::Kind::Cartan) {
        // zero
      } else if (bi.kind == LieBasisElem::Kind::Cartan || bj.kind == LieBasisElem::Kind::Cartan) {
        int hidx = bi.kind == LieBasisElem::Kind::Cartan ? i : j;
        int ridx = bi.kind == LieBasisElem::Kind::Cartan ? j : i;
        RootVec rv = signed_root(ridx);
        Rat pairing(0);
        for (int t = 0; t < l; ++t) pairing += Rat(rv[t]) * rs.cartan.at(t, g.basis[hidx].cartan_index);
        if (!is_zero(pairing)) {
          Rat c = bi.kind == LieBasisElem::Kind::Cartan ? pairing : -pairing;
          out.push_back({ridx, c});
        }
      } else {
        RootVec a = signed_root(i), b = signed_root(j);
        RootVec s = add(a, b);
        if (is_zero_vec(s)) {
          // [e_alpha, f_alpha] = h_alpha = sum a_t (d_t/d_alpha) h_t
          RootVec pos = vsign(a) > 0 ? a : b;
          Rat dalpha = rs.half_norm(pos);
          Rat sign = vsign(a) > 0 ? Rat(1) : Rat(-1);
          for (int t = 0; t < l; ++t) {
            if (pos[t] == 0) continue;
            Rat c = sign * Rat(pos[t]) * rs.d[t] / dalpha;
            if (!is_zero(c)) out.push_back({t, c});
          }
        } else if (N.is_root(s)) {
          Rat n = N.nany(a, b);
          if (!is_zero(n)) out.push_back({root_basis_index(s), n});
        }
      }
      g.brk[i][j] = std::move(out);
    }
  }
  return g;
}

GradedLieAlgebra parabolic_grading(const GradedLieAlgebra& g, const std::vector<int>& sigma) {
  if (sigma.empty()) throw std::invalid_argument("parabolic_grading: empty grading subset");
  GradedLieAlgebra out = g;
  out.sigma = sigma;
  std::sort(out.sigma.begin(), out.sigma.end());
  for (int s : out.sigma)
    if (s < 1 || s > g.rs.rank) throw std::out_of_range("parabolic_grading: simple index out of range");
  for (auto& b : out.basis) {
    if (b.kind == LieBasisElem::Kind::Cartan) {
      b.degree = 0;
      continue;
    }
    long deg = 0;
    for (int s : out.sigma) deg += b.root[s - 1];
    b.degree = b.kind == LieBasisElem::Kind::EPos ? Rat(deg) : Rat(-deg);
  }
  // E = sum t_i h_i with alpha_j(E) = [j in sigma]; C t = indicator
  std::vector<Rat> ind(g.rs.rank, Rat(0));
  for (int s : out.sigma) ind[s - 1] = 1;
  std::vector<Rat> t(g.rs.rank, Rat(0));
  for (int i = 0; i < g.rs.rank; ++i)
    for (int j = 0; j < g.rs.rank; ++j) t[i] += g.rs.inverse_cartan.at(i, j) * ind[j];
  out.grading_element = t;
  return out;
}

Mat<Rat> killing_form(const GradedLieAlgebra& g) {
  int n = g.dim();
  Mat<Rat> B(n, n);
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) {
      Rat s(0);
      for (int k = 0; k < n; ++k)
        for (const auto& [m, c1] : g.brk[v][k])
          for (const auto& [k2, c2] : g.brk[u][m])
            if (k2 == k) s += c1 * c2;
      B.at(u, v) = s;
      B.at(v, u) = s;
    }
  return B;
}

Mat<Rat> theta_involution(const GradedLieAlgebra& g) {
  int n = g.dim();
  int m = static_cast<int>(g.rs.positive_roots.size());
  Mat<Rat> th(n, n);
  for (int i = 0; i < g.rs.rank; ++i) th.at(i, i) = -1;
  for (int r = 0; r < m; ++r) {
    th.at(g.f_index(r), g.e_index(r)) = -1;
    th.at(g.e_index(r), g.f_index(r)) = -1;
  }
  return th;
}

bool is_contact_grading(const GradedLieAlgebra& g) {
  if (g.sigma.empty()) return false;
  auto gm2 = g.indices_of_degree(Rat(-2));
  auto gm1 = g.indices_of_degree(Rat(-1));
  if (gm2.size() != 1 || gm1.empty()) return false;
  if (g.min_degree() != Rat(-2)) return false;
  int z = gm2[0];
  int k = static_cast<int>(gm1.size());
  Mat<Rat> omega(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      for (const auto& [idx, c] : g.brk[gm1[i]][gm1[j]])
        if (idx == z) omega.at(i, j) = c;
    }
  return !is_zero(det(omega));
}

}  // namespace exgeo
