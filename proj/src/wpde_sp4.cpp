#include "exgeo/wpde/sp4.hpp"

#include "exgeo/subspace.hpp"

namespace exgeo::wpde::sp4 {

namespace {

Mat<QR> elem4(int i, int j) {  // 1-based matrix unit
  Mat<QR> m(4, 4);
  m.at(i - 1, j - 1) = QR(1);
  return m;
}

std::vector<QR> flatten_q(const Mat<QR>& m) { return m.a; }

Fixture build_fixture() {
  Fixture fx;
  QR s = QR::inv_sqrt2();
  fx.a_basis = {
      elem4(1, 4),
      s * (elem4(1, 3) + elem4(2, 4)),
      s * (elem4(1, 2) - elem4(3, 4)),
      elem4(2, 3),
      s * (elem4(1, 1) - elem4(4, 4)),
      s * (elem4(2, 2) - elem4(3, 3)),
      elem4(3, 2),
      s * (elem4(2, 1) - elem4(4, 3)),
      s * (elem4(3, 1) + elem4(4, 2)),
      elem4(4, 1),
  };

  // coordinates in the A basis by linear solve over the 16 matrix entries
  Mat<QR> coords_sys(16, 10);
  for (int k = 0; k < 10; ++k) {
    auto fl = flatten_q(fx.a_basis[k]);
    for (int r = 0; r < 16; ++r) coords_sys.at(r, k) = fl[r];
  }
  auto a_coords = [&](const Mat<QR>& m) {
    auto sol = solve(coords_sys, flatten_q(m));
    if (!sol) throw std::logic_error("sp4 fixture: matrix outside the span of the A basis");
    return *sol;
  };

  // grading by E = diag(1,0,0,-1)
  Mat<QR> E(4, 4);
  E.at(0, 0) = QR(1);
  E.at(3, 3) = QR(-1);
  for (const auto& A : fx.a_basis) {
    Mat<QR> br = commutator(E, A);
    // must be deg * A
    Rat deg;
    bool found = false;
    for (int r = 0; r < 16 && !found; ++r)
      if (!is_zero(A.a[r])) {
        Quad<Rat> ratio = br.a[r] / A.a[r];
        if (!is_zero(ratio.b)) throw std::logic_error("sp4 fixture: non-rational degree");
        deg = ratio.a;
        found = true;
      }
    if (!(br == QR(deg) * A)) throw std::logic_error("sp4 fixture: A basis not graded");
    fx.a_degree.push_back(deg);
  }

  // adjoint action in the A basis
  for (int i = 0; i < 10; ++i) {
    Mat<QR> M(10, 10);
    for (int j = 0; j < 10; ++j) {
      auto c = a_coords(commutator(fx.a_basis[i], fx.a_basis[j]));
      for (int k = 0; k < 10; ++k) M.at(k, j) = c[k];
    }
    fx.ad.push_back(std::move(M));
  }

  // Killing form
  fx.killing = Mat<QR>(10, 10);
  for (int i = 0; i < 10; ++i)
    for (int j = i; j < 10; ++j) {
      QR t = (fx.ad[i] * fx.ad[j]).trace();
      fx.killing.at(i, j) = t;
      fx.killing.at(j, i) = t;
    }

  // theta(A) = -A^T through the A basis
  fx.theta = Mat<QR>(10, 10);
  for (int j = 0; j < 10; ++j) {
    auto c = a_coords(-fx.a_basis[j].transpose());
    for (int k = 0; k < 10; ++k) fx.theta.at(k, j) = c[k];
  }

  // product on V: (u,v) = -B(u, theta v)
  fx.v_gram = -(fx.killing * fx.theta);

  // operator column (frame order X=0, Y=1, Z=2 in the ea fixture)
  auto W = [](std::initializer_list<int> w) { return std::vector<int>(w); };
  fx.p_column = {
      {{QR(rat(-1, 2)), W({2, 2})}},
      {{QR(1), W({1, 2})}},
      {{QR(1), W({0, 2})}},
      {{QR(-1), W({1, 1})}},
      {{QR(0) - s, W({2})}},
      {{QR(0) - s, W({0, 1})}, {QR(0) - s, W({1, 0})}},
      {{QR(1), W({0, 0})}},
      {{QR(1), W({1})}},
      {{QR(1), W({0})}},
      {{QR(1), W({})}},
  };

  // gbar = rho(g) + R Id inside gl(10)
  for (const auto& m : fx.ad) fx.gbar.push_back(m);
  fx.gbar.push_back(Mat<QR>::identity(10));
  int k = static_cast<int>(fx.gbar.size());
  fx.gbar_gram = Mat<QR>(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      QR t = (fx.gbar[i] * fx.gbar[j]).trace();
      fx.gbar_gram.at(i, j) = t;
      fx.gbar_gram.at(j, i) = t;
    }

  // gbar' per gl degree: trace-orthogonal to the gbar elements of the
  // opposite degree
  std::map<Rat, std::vector<std::pair<int, int>>> blocks;
  for (int u = 0; u < 10; ++u)
    for (int v = 0; v < 10; ++v) blocks[fx.a_degree[u] - fx.a_degree[v]].push_back({u, v});
  std::map<Rat, std::vector<int>> gbar_by_deg;
  for (int i = 0; i < k; ++i) {
    // all gbar elements are degree-homogeneous: ad(A_i) has degree of A_i, Id 0
    Rat d = i < 10 ? fx.a_degree[i] : Rat(0);
    gbar_by_deg[d].push_back(i);
  }
  for (const auto& [d, pairs] : blocks) {
    std::vector<int> duals;
    if (auto it = gbar_by_deg.find(-d); it != gbar_by_deg.end()) duals = it->second;
    Mat<QR> sys(static_cast<int>(duals.size()), static_cast<int>(pairs.size()));
    for (size_t r = 0; r < duals.size(); ++r)
      for (size_t c = 0; c < pairs.size(); ++c) {
        // Tr(E_uv G) = G_{vu}
        auto [u, v] = pairs[c];
        sys.at(static_cast<int>(r), static_cast<int>(c)) = fx.gbar[duals[r]].at(v, u);
      }
    Mat<QR> ker = duals.empty() ? Mat<QR>::identity(static_cast<int>(pairs.size())) : kernel(sys);
    for (int r = 0; r < ker.rows; ++r) {
      Mat<QR> m(10, 10);
      for (size_t c = 0; c < pairs.size(); ++c)
        if (!is_zero(ker.at(r, static_cast<int>(c)))) m.at(pairs[c].first, pairs[c].second) = ker.at(r, static_cast<int>(c));
      fx.gbar_prime.push_back(std::move(m));
      fx.gbar_prime_degree.push_back(d);
    }
  }
  if (static_cast<int>(fx.gbar_prime.size()) != 89) throw std::logic_error("sp4 fixture: gbar' dimension is off");

  // coordinate extraction for gbar': rref of [basis | I]
  int nn = 100, du = 89;
  Mat<QR> aug(nn, du + nn);
  for (int c = 0; c < du; ++c) {
    auto fl = flatten_q(fx.gbar_prime[c]);
    for (int r = 0; r < nn; ++r) aug.at(r, c) = fl[r];
  }
  for (int r = 0; r < nn; ++r) aug.at(r, du + r) = QR(1);
  std::vector<int> piv = rref(aug);
  std::vector<int> pivot_rows(du, -1);
  for (size_t r = 0; r < piv.size(); ++r)
    if (piv[r] < du) pivot_rows[piv[r]] = static_cast<int>(r);
  fx.uprime_extract = Mat<QR>(du, nn);
  for (int c = 0; c < du; ++c) {
    if (pivot_rows[c] < 0) throw std::logic_error("sp4 fixture: gbar' basis dependent");
    for (int r = 0; r < nn; ++r) fx.uprime_extract.at(c, r) = aug.at(pivot_rows[c], du + r);
  }
  return fx;
}

}  // namespace

const Fixture& fixture() {
  static const Fixture fx = build_fixture();
  return fx;
}

CochainComplex<QR> quotient_complex() {
  const Fixture& fx = fixture();
  CochainData<QR> d;
  // g_- ordered (X, Y, Z) = (A_8, A_9, A_10)
  d.gdim = 3;
  d.gdeg = {rat(-1), rat(-1), rat(-2)};
  d.gbrk.assign(3, std::vector<std::vector<QR>>(3, std::vector<QR>(3, QR(0))));
  // [X,Y] = -Z, the rest commute
  d.gbrk[0][1][2] = QR(-1);
  d.gbrk[1][0][2] = QR(1);
  d.ggram = Mat<QR>(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d.ggram.at(i, j) = fx.v_gram.at(7 + i, 7 + j);

  d.udim = 89;
  d.udeg = fx.gbar_prime_degree;
  // action of X,Y,Z on gbar' by commutator with ad(A_8), ad(A_9), ad(A_10)
  auto coords_of = [&](const Mat<QR>& m) { return fx.uprime_extract.apply(m.a); };
  for (int f = 0; f < 3; ++f) {
    const Mat<QR>& R = fx.ad[7 + f];
    Mat<QR> M(89, 89);
    for (int c = 0; c < 89; ++c) {
      Mat<QR> img = commutator(R, fx.gbar_prime[c]);
      auto x = coords_of(img);
      // the complement is ad-invariant; verify the expansion reproduces img
      Mat<QR> rec(10, 10);
      for (int r = 0; r < 89; ++r)
        if (!is_zero(x[r])) rec = rec + x[r] * fx.gbar_prime[r];
      if (!(rec == img)) throw std::logic_error("sp4 complex: gbar' is not invariant");
      for (int r = 0; r < 89; ++r) M.at(r, c) = x[r];
    }
    d.uact.push_back(std::move(M));
  }
  // product on gl(10): tr(A B^*) with B^* adjoint for the V product
  auto gv_inv = inverse(fx.v_gram);
  if (!gv_inv) throw std::logic_error("sp4 complex: V gram singular");
  std::vector<Mat<QR>> stars;
  for (int c = 0; c < 89; ++c) stars.push_back((*gv_inv) * fx.gbar_prime[c].transpose() * fx.v_gram);
  d.ugram = Mat<QR>(89, 89);
  for (int i = 0; i < 89; ++i)
    for (int j = i; j < 89; ++j) {
      QR t = (fx.gbar_prime[i] * stars[j]).trace();
      d.ugram.at(i, j) = t;
      d.ugram.at(j, i) = t;
    }
  return build_complex(std::move(d));
}

Cochain<QR> chi_cochain(const CochainComplex<QR>& cx, const Mat<QR>& chi_x, const Mat<QR>& chi_y,
                        const Mat<QR>& chi_z) {
  const Fixture& fx = fixture();
  Cochain<QR> c;
  c.q = 1;
  c.p = 1;
  int n1 = cx.dim_c(1, c.p);
  c.coords.assign(n1, QR(0));
  auto put = [&](int frame, const Mat<QR>& m) {
    auto coords = fx.uprime_extract.apply(m.a);
    const auto& idx = cx.p1.at(c.p);
    for (size_t i = 0; i < idx.size(); ++i) {
      auto [a, mm] = cx.c1[idx[i]];
      if (a == frame && !is_zero(coords[mm])) c.coords[i] += coords[mm];
    }
  };
  put(0, chi_x);
  put(1, chi_y);
  put(2, chi_z);
  return c;
}

Cochain<QR> gamma_cochain(const CochainComplex<QR>& cx) {
  const Fixture& fx = fixture();
  // project E_74 onto gbar' (trace-orthogonal split), then place at the X slot
  Mat<QR> e74(10, 10);
  e74.at(6, 3) = QR(1);
  int k = static_cast<int>(fx.gbar.size());
  std::vector<QR> rhs(k);
  for (int i = 0; i < k; ++i) rhs[i] = (e74 * fx.gbar[i]).trace();
  auto c = solve(fx.gbar_gram, rhs);
  if (!c) throw std::logic_error("gamma_cochain: gram singular");
  Mat<QR> proj = e74;
  for (int i = 0; i < k; ++i)
    if (!is_zero((*c)[i])) proj = proj - (*c)[i] * fx.gbar[i];
  Mat<QR> zero(10, 10);
  return chi_cochain(cx, proj, zero, zero);
}

}  // namespace exgeo::wpde::sp4
