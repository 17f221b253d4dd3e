#pragma once

#include "exgeo/wpde/poly.hpp"
#include "exgeo/matrix.hpp"
#include "exgeo/ratfunc.hpp"

namespace exgeo::wpde {

// Companion frame of a scalar linear ODE y^{(k+1)} = p_0 y^{(k)} + ... + p_k y.
//
// Given a fundamental system theta = (theta_0 .. theta_k), the frame matrix
// has rows Theta_r = theta^{(k-r)}. The defining identity
//     d(Theta) = C * Theta,       C = companion matrix of (p_0 .. p_k),
// is verified exactly as polynomials (equivalently d(Theta) Theta^{-1} = C dx
// wherever Theta is invertible).
//
// Everything is expressed over a polynomial ring with a derivation d/dx: the
// ring may contain the genuine variable x (Veronese solutions) or formal jet
// symbols theta_j^{(i)} with the top derivative rewritten through the ODE
// (symbolic-coefficient verification).
template <class K>
struct WilczynskiFrame {
  Mat<Poly<K>> theta_matrix;  // (k+1) x (k+1) rows = derived solutions
  Mat<Poly<K>> companion;     // first row p_0..p_k, unit subdiagonal
  bool identity_verified = false;
};

template <class K>
Mat<Poly<K>> companion_matrix(const std::vector<Poly<K>>& p, int arity) {
  int k1 = static_cast<int>(p.size());
  Mat<Poly<K>> c(k1, k1);
  for (int j = 0; j < k1; ++j) c.at(0, j) = p[j];
  for (int i = 1; i < k1; ++i) c.at(i, i - 1) = Poly<K>::constant(arity, K(1));
  return c;
}

// Determinant over the polynomial ring by Laplace expansion (small sizes).
template <class K>
Poly<K> poly_det(const Mat<Poly<K>>& m, unsigned rowmask = 0, int col = 0) {
  int n = m.rows;
  if (col == n) {
    Poly<K> one;
    // identify the arity from any entry
    for (const auto& e : m.a)
      if (!e.zero()) return Poly<K>::constant(static_cast<int>(e.t.begin()->first.size()), K(1));
    return one;
  }
  Poly<K> acc;
  int sign = 1;
  for (int r = 0; r < n; ++r) {
    if (rowmask & (1u << r)) continue;
    if (!m.at(r, col).zero()) {
      Poly<K> sub = poly_det(m, rowmask | (1u << r), col + 1);
      acc = sign > 0 ? acc + m.at(r, col) * sub : acc - m.at(r, col) * sub;
    }
    sign = -sign;
  }
  return acc;
}

// deriv: the ring derivation d/dx.
template <class K, class Deriv>
WilczynskiFrame<K> wilczynski_frame(const std::vector<Poly<K>>& p, const std::vector<Poly<K>>& theta, int arity,
                                    Deriv deriv) {
  int k1 = static_cast<int>(p.size());
  if (static_cast<int>(theta.size()) != k1)
    throw std::invalid_argument("wilczynski_frame: need k+1 fundamental solutions for an order-k+1 equation");
  WilczynskiFrame<K> out;
  out.theta_matrix = Mat<Poly<K>>(k1, k1);
  // row r = theta^{(k - r)}, bottom row = theta
  std::vector<std::vector<Poly<K>>> ders(k1);
  ders[0] = theta;
  for (int d = 1; d < k1; ++d) {
    ders[d].resize(k1);
    for (int j = 0; j < k1; ++j) ders[d][j] = deriv(ders[d - 1][j]);
  }
  for (int r = 0; r < k1; ++r)
    for (int j = 0; j < k1; ++j) out.theta_matrix.at(r, j) = ders[k1 - 1 - r][j];

  // Wronskian-type degeneracy check
  Poly<K> w = poly_det(out.theta_matrix);
  if (w.zero()) throw std::invalid_argument("wilczynski_frame: theta is not a fundamental system (zero Wronskian)");

  out.companion = companion_matrix(p, arity);
  // verify d(Theta) = C Theta exactly
  out.identity_verified = true;
  for (int r = 0; r < k1; ++r)
    for (int j = 0; j < k1; ++j) {
      Poly<K> lhs = deriv(out.theta_matrix.at(r, j));
      Poly<K> rhs;
      for (int t = 0; t < k1; ++t) rhs = rhs + out.companion.at(r, t) * out.theta_matrix.at(t, j);
      if (!(lhs == rhs)) out.identity_verified = false;
    }
  return out;
}

// Veronese fundamental system ((-x)^k, (-x)^{k-1}, ..., -x, 1) in a ring whose
// variable 0 is x.
template <class K>
std::vector<Poly<K>> veronese_theta(int k, int arity) {
  std::vector<Poly<K>> out;
  Poly<K> mx = K(-1) * Poly<K>::variable(arity, 0);
  Poly<K> cur = Poly<K>::constant(arity, K(1));
  std::vector<Poly<K>> pows = {cur};
  for (int i = 1; i <= k; ++i) pows.push_back(pows.back() * mx);
  for (int i = k; i >= 0; --i) out.push_back(pows[i]);
  return out;
}

}  // namespace exgeo::wpde
