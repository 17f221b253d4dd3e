#include "exgeo/repmod.hpp"

#include <algorithm>
#include <stdexcept>

namespace exgeo {

namespace {

// (mu, alpha) for mu in omega-coords and alpha a root in alpha-coords:
// (omega_k, alpha_t) = delta_{kt} d_t.
Rat ip_omega_root(const RootSystem& rs, const std::vector<Rat>& mu, const std::vector<int>& a) {
  Rat s(0);
  for (int k = 0; k < rs.rank; ++k)
    if (a[k] != 0 && !is_zero(mu[k])) s += mu[k] * Rat(a[k]) * rs.d[k];
  return s;
}

// (mu, nu) for both in omega-coords: (omega_i, omega_j) = p_{ij} d_j.
Rat ip_omega(const RootSystem& rs, const std::vector<Rat>& mu, const std::vector<Rat>& nu) {
  Rat s(0);
  for (int i = 0; i < rs.rank; ++i) {
    if (is_zero(mu[i])) continue;
    for (int j = 0; j < rs.rank; ++j) {
      if (is_zero(nu[j])) continue;
      s += mu[i] * nu[j] * rs.inverse_cartan.at(i, j) * rs.d[j];
    }
  }
  return s;
}

std::vector<Rat> add_vec(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::vector<Rat> root_omega(const RootSystem& rs, const std::vector<int>& a) {
  std::vector<Rat> u(a.begin(), a.end());
  return rs.alpha_to_omega(u);
}

Rat weight_height(const RootSystem& rs, const std::vector<Rat>& omega_coords) {
  auto a = rs.omega_to_alpha(omega_coords);
  Rat s(0);
  for (const auto& x : a) s += x;
  return s;
}

}  // namespace

bool is_dominant(const RootSystem& rs, const Weight& w) {
  Weight om = rs.in_omega(w);
  for (const auto& c : om.coords)
    if (sgn(c) < 0 || c.get_den() != 1) return false;
  return true;
}

Int weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (!is_dominant(rs, lambda)) throw std::invalid_argument("weyl_dim: weight is not dominant integral");
  Weight lo = rs.in_omega(lambda);
  std::vector<Rat> lrho = lo.coords;
  for (auto& c : lrho) c += 1;
  std::vector<Rat> rho(rs.rank, Rat(1));
  Rat prod(1);
  for (const auto& a : rs.positive_roots) {
    prod *= ip_omega_root(rs, lrho, a) / ip_omega_root(rs, rho, a);
  }
  if (prod.get_den() != 1) throw std::logic_error("weyl_dim: non-integral result");
  return prod.get_num();
}

std::map<std::vector<Rat>, Int> weight_multiplicities(const RootSystem& rs, const Weight& lambda) {
  if (!is_dominant(rs, lambda)) throw std::invalid_argument("weight_multiplicities: weight is not dominant integral");
  std::vector<Rat> top = rs.in_omega(lambda).coords;
  std::vector<Rat> rho(rs.rank, Rat(1));
  Rat top_norm = ip_omega(rs, add_vec(top, rho), add_vec(top, rho));

  std::map<std::vector<Rat>, Int> mult;
  mult[top] = 1;
  std::vector<std::vector<Rat>> level = {top};
  std::vector<std::vector<Rat>> simple_om(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    std::vector<Rat> row(rs.rank);
    for (int j = 0; j < rs.rank; ++j) row[j] = rs.cartan.at(i, j);
    simple_om[i] = row;
  }
  while (!level.empty()) {
    std::map<std::vector<Rat>, bool> next_cand;
    for (const auto& mu : level)
      for (int i = 0; i < rs.rank; ++i) {
        std::vector<Rat> nu(mu);
        for (int j = 0; j < rs.rank; ++j) nu[j] -= simple_om[i][j];
        if (!mult.count(nu)) next_cand[nu] = true;
      }
    std::vector<std::vector<Rat>> next;
    for (auto& [nu, _] : next_cand) {
      Rat denom = top_norm - ip_omega(rs, add_vec(nu, rho), add_vec(nu, rho));
      Rat num(0);
      for (const auto& a : rs.positive_roots) {
        auto aom = root_omega(rs, a);
        std::vector<Rat> w = nu;
        while (true) {
          w = add_vec(w, aom);
          auto it = mult.find(w);
          if (it == mult.end()) break;
          num += ip_omega_root(rs, w, a) * Rat(it->second);
        }
      }
      num *= 2;
      if (is_zero(denom)) continue;  // on the W(lambda+rho) sphere: not a weight
      Rat m = num / denom;
      if (sgn(m) > 0) {
        if (m.get_den() != 1) throw std::logic_error("freudenthal: non-integral multiplicity");
        mult[nu] = m.get_num();
        next.push_back(nu);
      }
    }
    level = std::move(next);
  }
  return mult;
}

// ---- irreducible module construction -----------------------------------

namespace {

using Word = std::vector<int>;           // f_{w[0]} f_{w[1]} ... applied to the highest vector
using LinComb = std::map<Word, Rat>;

struct IrrepBuilder {
  const GradedLieAlgebra& g;
  const RootSystem& rs;
  std::vector<Rat> lambda;  // omega coords
  std::map<std::pair<int, Word>, LinComb> e_memo;
  std::map<std::pair<Word, Word>, Rat> s_memo;

  IrrepBuilder(const GradedLieAlgebra& ga, std::vector<Rat> lam) : g(ga), rs(ga.rs), lambda(std::move(lam)) {}

  std::vector<Rat> weight_of(const Word& w) const {
    std::vector<Rat> nu = lambda;
    for (int i : w)
      for (int j = 0; j < rs.rank; ++j) nu[j] -= rs.cartan.at(i, j);
    return nu;
  }

  const LinComb& e_apply(int i, const Word& w) {
    auto key = std::make_pair(i, w);
    auto it = e_memo.find(key);
    if (it != e_memo.end()) return it->second;
    LinComb out;
    if (!w.empty()) {
      int j = w.front();
      Word rest(w.begin() + 1, w.end());
      for (const auto& [u, c] : e_apply(i, rest)) {
        Word ju;
        ju.reserve(u.size() + 1);
        ju.push_back(j);
        ju.insert(ju.end(), u.begin(), u.end());
        out[ju] += c;
      }
      if (i == j) {
        // + h_i acting on rest: <wt(rest), alpha_i-coroot> = omega-coordinate i
        Rat h = weight_of(rest)[i];
        if (!is_zero(h)) out[rest] += h;
      }
      for (auto it2 = out.begin(); it2 != out.end();)
        it2 = is_zero(it2->second) ? out.erase(it2) : std::next(it2);
    }
    return e_memo.emplace(key, std::move(out)).first->second;
  }

  Rat s_form(const Word& a, const Word& b) {
    if (a.empty() && b.empty()) return Rat(1);
    if (a.empty() || b.empty()) return Rat(0);
    if (weight_of(a) != weight_of(b)) return Rat(0);
    std::pair<Word, Word> key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = s_memo.find(key);
    if (it != s_memo.end()) return it->second;
    const Word& x = key.first;
    const Word& y = key.second;
    int i = x.front();
    Word rest(x.begin() + 1, x.end());
    Rat s(0);
    for (const auto& [u, c] : e_apply(i, y)) s += c * s_form(rest, u);
    s_memo.emplace(key, s);
    return s;
  }

  Rat s_form_comb(const Word& a, const LinComb& b) {
    Rat s(0);
    for (const auto& [u, c] : b) s += c * s_form(a, u);
    return s;
  }
};

}  // namespace

GradedModule irrep(GPtr gp, const Weight& lambda_in) {
  const GradedLieAlgebra& g = *gp;
  const RootSystem& rs = g.rs;
  if (!is_dominant(rs, lambda_in)) throw std::invalid_argument("irrep: highest weight must be dominant integral");
  Weight lam = rs.in_omega(lambda_in);
  IrrepBuilder ib(g, lam.coords);

  struct WSpace {
    std::vector<Word> basis;
    Mat<Rat> gram;
  };
  std::map<std::vector<Rat>, WSpace> spaces;
  spaces[lam.coords] = {{Word{}}, Mat<Rat>(1, 1)};
  spaces[lam.coords].gram.at(0, 0) = 1;

  std::vector<Word> queue = {Word{}};
  size_t head = 0;
  while (head < queue.size()) {
    Word w = queue[head++];
    for (int i = 0; i < rs.rank; ++i) {
      Word wi;
      wi.reserve(w.size() + 1);
      wi.push_back(i);
      wi.insert(wi.end(), w.begin(), w.end());
      auto nu = ib.weight_of(wi);
      auto& sp = spaces[nu];
      int k = static_cast<int>(sp.basis.size());
      std::vector<Rat> c(k);
      for (int t = 0; t < k; ++t) c[t] = ib.s_form(wi, sp.basis[t]);
      Rat nn = ib.s_form(wi, wi);
      // Schur complement decides independence inside L(lambda)
      Rat schur = nn;
      if (k > 0) {
        auto sol = solve(sp.gram, c);
        for (int t = 0; t < k; ++t) schur -= c[t] * (*sol)[t];
      }
      if (is_zero(schur)) {
        if (sp.basis.empty()) spaces.erase(nu);
        continue;
      }
      Mat<Rat> ng(k + 1, k + 1);
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) ng.at(a, b) = sp.gram.at(a, b);
        ng.at(a, k) = c[a];
        ng.at(k, a) = c[a];
      }
      ng.at(k, k) = nn;
      sp.gram = std::move(ng);
      sp.basis.push_back(wi);
      queue.push_back(wi);
    }
  }

  GradedModule m;
  m.g = gp;
  m.highest_weight = lam;
  m.shift = 0;
  std::vector<Word> basis;
  for (auto& [nu, sp] : spaces)
    for (auto& w : sp.basis) {
      basis.push_back(w);
      m.weights.push_back(nu);
    }
  m.dim = static_cast<int>(basis.size());
  Int wd = weyl_dim(rs, lam);
  if (Int(m.dim) != wd) throw std::logic_error("irrep: dimension disagrees with the Weyl formula");

  std::map<Word, int> index;
  for (int i = 0; i < m.dim; ++i) index[basis[i]] = i;

  // coordinates of a linear combination of words inside its weight space
  auto coords_of = [&](const std::vector<Rat>& nu, const LinComb& comb) -> std::vector<std::pair<int, Rat>> {
    auto it = spaces.find(nu);
    std::vector<std::pair<int, Rat>> out;
    if (it == spaces.end()) {
      // must be zero in L(lambda); verified via the form
      Rat norm(0);
      for (const auto& [u, c] : comb)
        for (const auto& [v, c2] : comb) norm += c * c2 * ib.s_form(u, v);
      if (!is_zero(norm)) throw std::logic_error("irrep: nonzero vector in a missing weight space");
      return out;
    }
    auto& sp = it->second;
    int k = static_cast<int>(sp.basis.size());
    std::vector<Rat> rhs(k);
    for (int t = 0; t < k; ++t) rhs[t] = ib.s_form_comb(sp.basis[t], comb);
    auto sol = solve(sp.gram, rhs);
    for (int t = 0; t < k; ++t)
      if (!is_zero((*sol)[t])) out.push_back({index[sp.basis[t]], (*sol)[t]});
    return out;
  };

  // generator actions
  int l = rs.rank;
  std::vector<int> simple_pos(l, -1);
  for (size_t r = 0; r < rs.positive_roots.size(); ++r)
    if (rs.root_height(rs.positive_roots[r]) == 1)
      for (int i = 0; i < l; ++i)
        if (rs.positive_roots[r][i] == 1) simple_pos[i] = static_cast<int>(r);

  m.action.assign(g.dim(), Mat<Rat>(m.dim, m.dim));
  for (int i = 0; i < l; ++i) {
    Mat<Rat>& H = m.action[g.h_index(i)];
    for (int v = 0; v < m.dim; ++v) H.at(v, v) = m.weights[v][i];
    Mat<Rat>& F = m.action[g.f_index(simple_pos[i])];
    Mat<Rat>& E = m.action[g.e_index(simple_pos[i])];
    for (int v = 0; v < m.dim; ++v) {
      const Word& w = basis[v];
      Word wi;
      wi.push_back(i);
      wi.insert(wi.end(), w.begin(), w.end());
      std::vector<Rat> nu = m.weights[v];
      for (int j = 0; j < l; ++j) nu[j] -= rs.cartan.at(i, j);
      LinComb single;
      single[wi] = 1;
      for (const auto& [r, c] : coords_of(nu, single)) F.at(r, v) = c;
      std::vector<Rat> nup = m.weights[v];
      for (int j = 0; j < l; ++j) nup[j] += rs.cartan.at(i, j);
      for (const auto& [r, c] : coords_of(nup, ib.e_apply(i, w))) E.at(r, v) = c;
    }
  }
  // extend along construction recipes
  for (int idx = 0; idx < g.dim(); ++idx) {
    const auto& b = g.basis[idx];
    if (b.kind != LieBasisElem::Kind::Cartan && b.simple_index >= 0) continue;
    if (b.kind == LieBasisElem::Kind::Cartan) continue;
    m.action[idx] = b.rec_scale * commutator(m.action[b.rec_x], m.action[b.rec_y]);
  }

  // contravariant Gram, block diagonal over weight spaces
  m.gram = Mat<Rat>(m.dim, m.dim);
  for (int a = 0; a < m.dim; ++a)
    for (int b = 0; b < m.dim; ++b)
      if (m.weights[a] == m.weights[b]) m.gram.at(a, b) = ib.s_form(basis[a], basis[b]);

  if (!g.sigma.empty()) {
    m.degrees.resize(m.dim);
    for (int v = 0; v < m.dim; ++v) m.degrees[v] = g.weight_degree(m.weights[v]);
  }
  return m;
}

GradedModule grade_module(GradedModule v, const Rat& shift) {
  if (v.degrees.empty()) throw std::logic_error("grade_module: module has no grading-element eigenvalues");
  for (auto& d : v.degrees) d += shift - v.shift;
  v.shift = shift;
  return v;
}

Rat default_shift(const GradedModule& v) {
  if (v.degrees.empty()) throw std::logic_error("default_shift: ungraded module");
  Rat mx = v.degrees[0] - v.shift;
  for (const auto& d : v.degrees) {
    Rat x = d - v.shift;
    if (x > mx) mx = x;
  }
  Rat out = -mx - 1;
  return out;
}

// ---- decomposition ------------------------------------------------------

std::vector<std::pair<Weight, Int>> greedy_decompose(const RootSystem& rs, std::map<std::vector<Rat>, Int> wm) {
  std::vector<std::pair<Weight, Int>> out;
  while (true) {
    // drop zeros
    for (auto it = wm.begin(); it != wm.end();) it = it->second == 0 ? wm.erase(it) : std::next(it);
    if (wm.empty()) break;
    auto best = wm.begin();
    Rat bh = weight_height(rs, best->first);
    for (auto it = std::next(wm.begin()); it != wm.end(); ++it) {
      Rat h = weight_height(rs, it->first);
      if (h > bh || (h == bh && it->first > best->first)) {
        best = it;
        bh = h;
      }
    }
    Weight top = Weight::omega(best->first);
    if (!is_dominant(rs, top)) throw std::invalid_argument("decompose: maximal weight is not dominant — not a module");
    Int mult = best->second;
    if (mult < 0) throw std::invalid_argument("decompose: negative multiplicity — not a module");
    auto wmult = weight_multiplicities(rs, top);
    for (const auto& [nu, c] : wmult) {
      wm[nu] -= mult * c;
      if (wm[nu] < 0) throw std::invalid_argument("decompose: inconsistent weight multiplicities");
    }
    out.push_back({top, mult});
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return a.first.coords < b.first.coords; });
  return out;
}

std::vector<std::pair<Weight, int>> decompose(const GPtr& g, const std::vector<Mat<Rat>>& action, int dim) {
  const RootSystem& rs = g->rs;
  // bracket compatibility on generator pairs guards against garbage input
  for (int i = 0; i < g->dim(); ++i)
    for (int j = i + 1; j < g->dim(); ++j) {
      Mat<Rat> lhs = commutator(action[i], action[j]);
      Mat<Rat> rhs(dim, dim);
      for (const auto& [k, c] : g->brk[i][j]) rhs = rhs + c * action[k];
      if (!(lhs == rhs)) throw std::invalid_argument("decompose: action does not respect brackets");
    }

  // split into simultaneous eigenspaces of the Cartan actions
  struct Block {
    Mat<Rat> vecs;               // rows are vectors in module coordinates
    std::vector<Rat> eigen;      // eigenvalues found so far (per h_i)
  };
  std::vector<Block> blocks;
  {
    Block all;
    all.vecs = Mat<Rat>::identity(dim);
    blocks.push_back(std::move(all));
  }
  for (int i = 0; i < rs.rank; ++i) {
    const Mat<Rat>& H = action[g->h_index(i)];
    std::vector<Block> next;
    for (auto& blk : blocks) {
      int k = blk.vecs.rows;
      // restricted operator T: rows(blk) * H^T expressed in rows(blk)
      Mat<Rat> img(k, dim);
      for (int r = 0; r < k; ++r) {
        std::vector<Rat> v(dim);
        for (int c = 0; c < dim; ++c) v[c] = blk.vecs.at(r, c);
        auto hv = H.apply(v);
        for (int c = 0; c < dim; ++c) img.at(r, c) = hv[c];
      }
      // solve X * vecs = img  (T = X^T acting on coordinates)
      Mat<Rat> vt = blk.vecs.transpose();
      Mat<Rat> T(k, k);
      for (int r = 0; r < k; ++r) {
        std::vector<Rat> rhs(dim);
        for (int c = 0; c < dim; ++c) rhs[c] = img.at(r, c);
        auto sol = solve(vt, rhs);
        if (!sol) throw std::logic_error("decompose: Cartan action does not preserve a block");
        for (int c = 0; c < k; ++c) T.at(r, c) = (*sol)[c];
      }
      // integer eigenvalue scan within a Gershgorin bound
      Rat bound(0);
      for (int r = 0; r < k; ++r) {
        Rat s(0);
        for (int c = 0; c < k; ++c) s += abs(T.at(r, c));
        bound = std::max(bound, s);
      }
      long B = ceil_long(bound);
      int found = 0;
      for (long ev = -B; ev <= B; ++ev) {
        Mat<Rat> shifted = T;
        for (int r = 0; r < k; ++r) shifted.at(r, r) -= Rat(ev);
        Mat<Rat> kerT = kernel(shifted.transpose());  // combinations x with x^T T = ev x^T
        if (kerT.rows == 0) continue;
        Block nb;
        nb.eigen = blk.eigen;
        nb.eigen.push_back(Rat(ev));
        nb.vecs = kerT * blk.vecs;
        found += nb.vecs.rows;
        next.push_back(std::move(nb));
      }
      if (found != k) throw std::logic_error("decompose: Cartan action not diagonalizable over the integers");
    }
    blocks = std::move(next);
  }

  std::map<std::vector<Rat>, Int> wm;
  for (const auto& blk : blocks) wm[blk.eigen] += blk.vecs.rows;
  auto dec = greedy_decompose(rs, std::move(wm));
  std::vector<std::pair<Weight, int>> out;
  for (auto& [w, c] : dec) out.push_back({w, static_cast<int>(c.get_si())});
  return out;
}

std::vector<std::pair<Weight, int>> decompose(const GradedModule& m) { return decompose(m.g, m.action, m.dim); }

Int tensor_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu) {
  if (!is_dominant(rs, lambda) || !is_dominant(rs, mu) || !is_dominant(rs, nu))
    throw std::invalid_argument("tensor_multiplicity: weights must be dominant integral");
  auto m1 = weight_multiplicities(rs, lambda);
  auto m2 = weight_multiplicities(rs, mu);
  std::map<std::vector<Rat>, Int> conv;
  for (const auto& [w1, c1] : m1)
    for (const auto& [w2, c2] : m2) conv[add_vec(w1, w2)] += c1 * c2;
  auto dec = greedy_decompose(rs, std::move(conv));
  std::vector<Rat> target = rs.in_omega(nu).coords;
  for (const auto& [w, c] : dec)
    if (w.coords == target) return c;
  return 0;
}

Weight lowest_of_highest(const RootSystem& rs, const Weight& lambda) {
  std::vector<Rat> v = rs.in_omega(lambda).coords;
  std::vector<Rat> out(rs.rank);
  switch (rs.family) {
    case Family::A:
      for (int i = 0; i < rs.rank; ++i) out[i] = -v[rs.rank - 1 - i];
      break;
    case Family::D:
      if (rs.rank % 2 == 1) {
        out = v;
        std::swap(out[rs.rank - 1], out[rs.rank - 2]);
        for (auto& c : out) c = -c;
        break;
      }
      [[fallthrough]];
    case Family::B:
    case Family::C:
    case Family::G2:
      for (int i = 0; i < rs.rank; ++i) out[i] = -v[i];
      break;
  }
  return Weight::omega(out);
}

Weight highest_of_lowest(const RootSystem& rs, const Weight& mu) {
  // w0 is an involution
  Weight h = lowest_of_highest(rs, mu);
  return h;
}

}  // namespace exgeo
