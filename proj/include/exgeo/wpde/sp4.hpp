#pragma once

#include "exgeo/cohomology.hpp"
#include "exgeo/quad.hpp"
#include "exgeo/wpde/solve.hpp"

namespace exgeo::wpde::sp4 {

using QR = Quad<Rat>;

// The explicit sp(4) data of the deformed contact system: the 10-element
// matrix basis A_1..A_10 (with its 1/sqrt2 normalizations, hence the Quad
// scalars), the adjoint module on R^10, the operator column P realizing the
// module isomorphism, and the trace splitting gl(10) = gbar + gbar'.
struct Fixture {
  std::vector<Mat<QR>> a_basis;  // 10 matrices, 4x4
  std::vector<Rat> a_degree;     // (2,1,1,0,0,0,0,-1,-1,-2)
  std::vector<Mat<QR>> ad;       // adjoint action in the A basis, 10x10
  Mat<QR> killing;               // of sp(4) in the A basis
  Mat<QR> theta;                 // X -> -X^T through the A basis
  Mat<QR> v_gram;                // -B(u, theta v): the invariant product on V
  struct PTerm {
    QR coeff;
    std::vector<int> word;  // over the ea frame order (X, Y, Z)
  };
  std::vector<std::vector<PTerm>> p_column;  // 10 rows
  std::vector<Mat<QR>> gbar;                 // ad(A_i) and the identity: 11 matrices 10x10
  std::vector<Mat<QR>> gbar_prime;           // trace complement, 89 matrices
  std::vector<Rat> gbar_prime_degree;
  Mat<QR> gbar_gram;       // Tr(G_i G_j), invertible
  Mat<QR> uprime_extract;  // coords in gbar_prime = extract * flatten(M), 89 x 100
};

const Fixture& fixture();

template <class K>
Quad<K> qlift(const QR& q) {
  return Quad<K>(K(q.a), K(q.b));
}

template <class K>
Mat<Quad<K>> mlift(const Mat<QR>& m) {
  Mat<Quad<K>> out(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = qlift<K>(m.a[i]);
  return out;
}

// Frame components of Omega = -dTheta Theta^{-1} at the evaluation point and
// the degree-graded gbar'-projections forming chi_1.
template <class K>
struct Chi1 {
  Mat<Quad<K>> f_z, f_x, f_y;        // Omega(Z), Omega(X), Omega(Y)
  Mat<Quad<K>> chi_x, chi_y, chi_z;  // chi_1 components in gbar'
  std::vector<Rat> eval_point;
};

namespace detail {

template <class K>
Poly<Quad<K>> poly_lift(const Poly<K>& p) {
  Poly<Quad<K>> out;
  for (const auto& [mo, c] : p.t) out.t[mo] = Quad<K>(c);
  return out;
}

template <class K>
ModelSpace<Quad<K>> space_lift(const ModelSpace<K>& sp) {
  ModelSpace<Quad<K>> out;
  out.coord_names = sp.coord_names;
  out.weights = sp.weights;
  out.param_names = sp.param_names;
  for (const auto& f : sp.fields) {
    typename ModelSpace<Quad<K>>::Field nf;
    nf.name = f.name;
    nf.order = f.order;
    for (const auto& c : f.coeff) nf.coeff.push_back(poly_lift<K>(c));
    out.fields.push_back(std::move(nf));
  }
  out.finalize();
  return out;
}

template <class K>
Quad<K> poly_eval(const Poly<Quad<K>>& p, const std::vector<Rat>& pt, int ncoords) {
  Quad<K> acc(K(0));
  for (const auto& [mo, c] : p.t) {
    Rat scale(1);
    for (int i = 0; i < ncoords; ++i) scale *= rat_pow(pt[i], mo[i]);
    for (size_t i = static_cast<size_t>(ncoords); i < mo.size(); ++i)
      if (mo[i] != 0) throw std::logic_error("unexpected parameter exponent");
    acc += Quad<K>(K(scale)) * c;
  }
  return acc;
}

}  // namespace detail

// chi_1 of the deformed system, exact over K (Rat with a concrete parameter,
// RatFunc with the parameter symbolic). The solutions are the published
// 10-element basis, the evaluation point is the origin with a deterministic
// fallback sweep.
template <class K>
Chi1<K> extract_chi1(const OperatorSystem<K>& ea_sys, const std::vector<Poly<K>>& solutions) {
  const Fixture& fx = fixture();
  if (solutions.size() != 10) throw std::invalid_argument("extract_chi1: need the 10 fundamental solutions");
  auto qspace = detail::space_lift<K>(ea_sys.space);
  int nc = qspace.ncoords();

  // Theta_{ij} = P_i(theta_j)
  std::vector<std::vector<Poly<Quad<K>>>> theta_mat(10, std::vector<Poly<Quad<K>>>(10));
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      Poly<Quad<K>> acc;
      for (const auto& term : fx.p_column[i]) {
        Poly<Quad<K>> w = qspace.apply_word(term.word, detail::poly_lift<K>(solutions[j]));
        acc = acc + qlift<K>(term.coeff) * w;
      }
      theta_mat[i][j] = std::move(acc);
    }

  // evaluation sweep: origin, then unit points
  std::vector<std::vector<Rat>> sweep;
  sweep.push_back(std::vector<Rat>(nc, Rat(0)));
  for (int i = 0; i < nc; ++i) {
    std::vector<Rat> pt(nc, Rat(0));
    pt[i] = 1;
    sweep.push_back(std::move(pt));
  }
  std::optional<Mat<Quad<K>>> tinv;
  std::vector<Rat> used;
  Mat<Quad<K>> T(10, 10);
  for (const auto& pt : sweep) {
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j) T.at(i, j) = detail::poly_eval<K>(theta_mat[i][j], pt, nc);
    auto inv = inverse(T);
    if (inv) {
      tinv = std::move(inv);
      used = pt;
      break;
    }
  }
  if (!tinv) throw std::runtime_error("extract_chi1: Theta singular at every sweep point");

  Chi1<K> out;
  out.eval_point = used;
  auto omega_of = [&](const std::string& field) {
    int f = qspace.field_index(field);
    Mat<Quad<K>> dth(10, 10);
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j)
        dth.at(i, j) = detail::poly_eval<K>(qspace.apply_field(f, theta_mat[i][j]), used, nc);
    return -(dth * (*tinv));
  };
  out.f_z = omega_of("Z");
  out.f_x = omega_of("X");
  out.f_y = omega_of("Y");

  // gbar'-projection: F - sum c_i G_i with Gram solve over the trace pairing
  Mat<Quad<K>> gram = mlift<K>(fx.gbar_gram);
  auto project = [&](const Mat<Quad<K>>& F) {
    int k = static_cast<int>(fx.gbar.size());
    std::vector<Quad<K>> rhs(k);
    for (int i = 0; i < k; ++i) rhs[i] = (F * mlift<K>(fx.gbar[i])).trace();
    auto c = solve(gram, rhs);
    if (!c) throw std::logic_error("extract_chi1: gbar trace gram is singular");
    Mat<Quad<K>> out2 = F;
    for (int i = 0; i < k; ++i)
      if (!is_zero((*c)[i])) out2 = out2 - (*c)[i] * mlift<K>(fx.gbar[i]);
    return out2;
  };
  auto graded_part = [&](const Mat<Quad<K>>& F, const Rat& d) {
    Mat<Quad<K>> out2(10, 10);
    for (int u = 0; u < 10; ++u)
      for (int v = 0; v < 10; ++v)
        if (fx.a_degree[u] - fx.a_degree[v] == d) out2.at(u, v) = F.at(u, v);
    return out2;
  };
  out.chi_x = graded_part(project(out.f_x), Rat(0));
  out.chi_y = graded_part(project(out.f_y), Rat(0));
  out.chi_z = graded_part(project(out.f_z), Rat(-1));
  return out;
}

// The quotient complex Hom(Lambda^q g_-, gl(V)/gbar) over Quad<Rat>, with
// g_- ordered (X, Y, Z) and the quotient realized on gbar'.
CochainComplex<QR> quotient_complex();

// Coordinates of a chi_1 (or any triple of gbar'-valued components) in the
// C^1 block of internal degree 1.
Cochain<QR> chi_cochain(const CochainComplex<QR>& cx, const Mat<QR>& chi_x, const Mat<QR>& chi_y,
                        const Mat<QR>& chi_z);

// gamma = E_74 (x) A_8^*: the 1-cochain sending X to (the gbar'-projection
// of) the matrix unit E_74, built in the same block.
Cochain<QR> gamma_cochain(const CochainComplex<QR>& cx);

}  // namespace exgeo::wpde::sp4
