#include <doctest.h>

#include "exgeo/wpde/sp4.hpp"
#include "exgeo/wpde/wilczynski.hpp"

using namespace exgeo;
using namespace exgeo::wpde;

namespace {

// d/dx on polynomials in the single variable x (variable 0)
Poly<Rat> ddx(const Poly<Rat>& p) { return p.derivative(0); }

}  // namespace

TEST_CASE("wilczynski frame for y'' = 0 with theta = (-x, 1)") {
  int arity = 1;
  std::vector<Poly<Rat>> p(2, Poly<Rat>());  // zero coefficients
  std::vector<Poly<Rat>> theta = {Rat(-1) * Poly<Rat>::variable(arity, 0), Poly<Rat>::constant(arity, Rat(1))};
  auto w = wilczynski_frame<Rat>(p, theta, arity, ddx);
  CHECK(w.identity_verified);
  // companion: zero first row, unit subdiagonal
  CHECK(w.companion.at(0, 0).zero());
  CHECK(w.companion.at(0, 1).zero());
  CHECK(w.companion.at(1, 0) == Poly<Rat>::constant(arity, Rat(1)));
}

TEST_CASE("wilczynski frame for the veronese curves up to k = 4") {
  for (int k = 1; k <= 4; ++k) {
    int arity = 1;
    std::vector<Poly<Rat>> p(k + 1, Poly<Rat>());
    auto theta = veronese_theta<Rat>(k, arity);
    auto w = wilczynski_frame<Rat>(p, theta, arity, ddx);
    CHECK(w.identity_verified);
    for (int j = 0; j <= k; ++j) CHECK(w.companion.at(0, j).zero());
    for (int i = 1; i <= k; ++i)
      for (int j = 0; j <= k; ++j) {
        if (j == i - 1)
          CHECK(w.companion.at(i, j) == Poly<Rat>::constant(arity, Rat(1)));
        else
          CHECK(w.companion.at(i, j).zero());
      }
  }
}

TEST_CASE("wilczynski frame with symbolic coefficients via jet variables") {
  // k = 1: y'' = p0 y' + p1 y; variables (u00,u01,u10,u11,p0,p1): u_{j,i} is
  // the i-th derivative of theta_j, with the top derivative rewritten
  int arity = 6;
  auto V = [&](int i) { return Poly<Rat>::variable(arity, i); };
  // derivation: u_{j,0} -> u_{j,1}; u_{j,1} -> p0 u_{j,1} + p1 u_{j,0};
  // p_i -> 0
  auto deriv = [&](const Poly<Rat>& q) {
    Poly<Rat> out;
    out = out + q.derivative(0) * V(1);
    out = out + q.derivative(2) * V(3);
    out = out + q.derivative(1) * (V(4) * V(1) + V(5) * V(0));
    out = out + q.derivative(3) * (V(4) * V(3) + V(5) * V(2));
    return out;
  };
  std::vector<Poly<Rat>> p = {V(4), V(5)};
  std::vector<Poly<Rat>> theta = {V(0), V(2)};
  auto w = wilczynski_frame<Rat>(p, theta, arity, deriv);
  CHECK(w.identity_verified);
  CHECK(w.companion.at(0, 0) == V(4));
  CHECK(w.companion.at(0, 1) == V(5));

  // degenerate theta is rejected
  std::vector<Poly<Rat>> bad = {V(0), Rat(2) * V(0)};
  CHECK_THROWS(wilczynski_frame<Rat>(p, bad, arity, deriv));
}

// ---- the sp(4) deformation -----------------------------------------------

namespace {

sp4::Chi1<Rat> chi_at(const Rat& a) {
  auto raw = parse_system(*fixture_text("ea"));
  auto sys = bind_params(raw, {{"a", a}});
  std::vector<Poly<Rat>> sols;
  for (auto& p : parse_poly_list(*fixture_basis_text("ea"), raw)) sols.push_back(bind_poly(p, raw, {{"a", a}}));
  return sp4::extract_chi1<Rat>(sys, sols);
}

}  // namespace

TEST_CASE("sp4 fixture internal consistency") {
  const auto& fx = sp4::fixture();
  CHECK(fx.a_degree == std::vector<Rat>{rat(2), rat(1), rat(1), rat(0), rat(0), rat(0), rat(0), rat(-1), rat(-1), rat(-2)});
  // X = A_8, Y = A_9, Z = A_10 reproduce the Heisenberg bracket
  Mat<sp4::QR> br = commutator(fx.a_basis[7], fx.a_basis[8]);
  CHECK(br == -fx.a_basis[9]);
  // ad acts faithfully and respects the bracket on a sample
  Mat<sp4::QR> lhs = commutator(fx.ad[7], fx.ad[8]);
  CHECK(lhs == -fx.ad[9]);
  // theta is an involution with positive-definite -B(., theta .)
  CHECK((fx.theta * fx.theta) == Mat<sp4::QR>::identity(10));
  for (int k = 1; k <= 10; ++k) {
    Mat<sp4::QR> minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor.at(i, j) = fx.v_gram.at(i, j);
    CHECK(sign(det(minor)) > 0);
  }
}

TEST_CASE("chi1 vanishes for the flat system and is linear in the parameter") {
  auto flat = chi_at(rat(0));
  CHECK(flat.chi_x.is_zero_mat());
  CHECK(flat.chi_y.is_zero_mat());
  CHECK(flat.chi_z.is_zero_mat());

  auto c1 = chi_at(rat(1));
  auto c2 = chi_at(rat(2));
  // E_74 coefficient of F_1 = Omega(X) equals the parameter
  CHECK(c1.f_x.at(6, 3) == sp4::QR(rat(1)));
  CHECK(c2.f_x.at(6, 3) == sp4::QR(rat(2)));
  // chi1 is linear: the a=2 class is twice the a=1 class componentwise
  CHECK(c2.chi_x == sp4::QR(rat(2)) * c1.chi_x);
  CHECK(c2.chi_y == sp4::QR(rat(2)) * c1.chi_y);
  CHECK(c2.chi_z == sp4::QR(rat(2)) * c1.chi_z);
  CHECK_FALSE(c1.chi_x.is_zero_mat());
}

TEST_CASE("chi1 with the parameter symbolic: F_1 entry is exactly a") {
  auto raw = parse_system(*fixture_text("ea"));
  auto sys = bind_params_symbolic(raw, {});
  std::vector<Poly<RatFunc>> sols;
  for (auto& p : parse_poly_list(*fixture_basis_text("ea"), raw)) sols.push_back(bind_poly_symbolic(p, raw, {}));
  auto chi = sp4::extract_chi1<RatFunc>(sys, sols);
  RatFunc a = RatFunc::var();
  CHECK(chi.f_x.at(6, 3) == Quad<RatFunc>(a));
  // every chi entry is a * (constant): substituting a keeps exactness
  for (const auto* m : {&chi.chi_x, &chi.chi_y, &chi.chi_z})
    for (const auto& e : m->a) {
      RatFunc c1 = e.a, c2 = e.b;
      for (const RatFunc* f : {&c1, &c2}) {
        if (f->zero()) continue;
        // f = a * constant
        RatFunc ratio = *f / a;
        CHECK(ratio.is_constant());
      }
    }
}

TEST_CASE("gamma is a cocycle but not a coboundary; chi1 represents a times gamma") {
  auto cx = sp4::quotient_complex();
  Rat p1 = rat(1);
  auto gamma = sp4::gamma_cochain(cx);
  // cocycle
  auto dg = cx.diff(1, p1).apply(gamma.coords);
  for (const auto& v : dg) CHECK(is_zero(v));
  // not a coboundary
  Mat<sp4::QR> d0 = cx.diff(0, p1);
  CHECK_FALSE(solve(d0, gamma.coords).has_value());
  // harmonic part of gamma is nonzero
  auto hg = harmonic_part(cx, gamma);
  bool nonzero = false;
  for (const auto& v : hg.coords) nonzero = nonzero || !is_zero(v);
  CHECK(nonzero);

  // chi1 at a = 1: also a nonzero class, equal to [gamma]
  auto chi = chi_at(rat(1));
  auto cc = sp4::chi_cochain(cx, chi.chi_x, chi.chi_y, chi.chi_z);
  auto dc = cx.diff(1, p1).apply(cc.coords);
  for (const auto& v : dc) CHECK(is_zero(v));
  CHECK_FALSE(solve(d0, cc.coords).has_value());
  auto hc = harmonic_part(cx, cc);
  bool hnz = false;
  for (const auto& v : hc.coords) hnz = hnz || !is_zero(v);
  CHECK(hnz);
  // class difference chi - 1*gamma is a coboundary
  std::vector<sp4::QR> diff(cc.coords.size());
  for (size_t i = 0; i < diff.size(); ++i) diff[i] = cc.coords[i] - gamma.coords[i];
  CHECK(solve(d0, diff).has_value());

  // H^1_1 of the quotient complex is the 6-dimensional space
  CHECK(cohomology_dim(cx, 1, p1) == 6);
}
