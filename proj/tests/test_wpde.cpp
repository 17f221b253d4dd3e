#include <doctest.h>

#include "exgeo/wpde/envelope.hpp"
#include "exgeo/wpde/filtration.hpp"
#include "exgeo/wpde/model.hpp"
#include "exgeo/wpde/solve.hpp"

using namespace exgeo;
using namespace exgeo::wpde;

namespace {

OperatorSystem<RatFunc> fx(const std::string& name) {
  auto text = fixture_text(name);
  REQUIRE(text.has_value());
  return parse_system(*text);
}
OperatorSystem<Rat> fx_at(const std::string& name, std::map<std::string, Rat> params = {}) {
  return bind_params(fx(name), params);
}

Poly<Rat> parse_rat_poly(const std::string& text, const OperatorSystem<RatFunc>& sys) {
  auto polys = parse_poly_list(text, sys);
  REQUIRE(polys.size() == 1);
  Poly<Rat> out;
  for (const auto& [mo, c] : polys[0].t) out.t[mo] = c.constant();
  return out;
}

}  // namespace

TEST_CASE("frame fields act as the contact derivations") {
  auto ea = fx_at("ea", {{"a", rat(0)}});
  const auto& sp = ea.space;
  int X = sp.field_index("X"), Y = sp.field_index("Y"), Z = sp.field_index("Z");
  auto fea = fx("ea");
  Poly<Rat> z = parse_rat_poly("z", fea);
  Poly<Rat> one = parse_rat_poly("1", fea);

  // X z = y/2
  CHECK(sp.apply_field(X, z) == parse_rat_poly("1/2*y", fea));
  // [X,Y] applied to z: X(Y z) - Y(X z) = -1
  Poly<Rat> br = sp.apply_field(X, sp.apply_field(Y, z)) - sp.apply_field(Y, sp.apply_field(X, z));
  CHECK(br == -one);
  // any field kills constants
  for (int f : {X, Y, Z}) CHECK(sp.apply_field(f, one).zero());
  // commutator table: [X,Y] = -Z
  CHECK(sp.comm[X][Y][Z] == Rat(-1));
  CHECK(is_zero(sp.comm[X][Z][Y]));
  // weighted orders
  CHECK(sp.fields[X].order == 1);
  CHECK(sp.fields[Y].order == 1);
  CHECK(sp.fields[Z].order == 2);
  // word semantics: rightmost acts first
  Poly<Rat> xz = parse_rat_poly("x*z", fea);
  CHECK(sp.apply_word({X, Y}, z) == sp.apply_field(X, sp.apply_field(Y, z)));
  (void)xz;
}

TEST_CASE("g2 frame commutators") {
  auto g2 = fx_at("g2_model");
  const auto& sp = g2.space;
  int X = sp.field_index("X"), Y = sp.field_index("Y"), Z = sp.field_index("Z"), W = sp.field_index("W");
  // brackets land on the missing 5th direction d/dv, which is not part of the
  // frame; closure requires the v-direction only through second brackets, so
  // the table must have been validated at parse time. The multiplication
  // below double-checks two entries by hand.
  auto fg2 = fx("g2_model");
  Poly<Rat> v = parse_rat_poly("v", fg2);
  Poly<Rat> br_xy = sp.apply_field(X, sp.apply_field(Y, v)) - sp.apply_field(Y, sp.apply_field(X, v));
  CHECK(br_xy == parse_rat_poly("-3", fg2));
  Poly<Rat> br_zw = sp.apply_field(Z, sp.apply_field(W, v)) - sp.apply_field(W, sp.apply_field(Z, v));
  CHECK(br_zw == parse_rat_poly("-1", fg2));
}

TEST_CASE("formal solution dimensions match the published counts") {
  struct Case {
    std::string name;
    std::map<std::string, Rat> params;
    int n;
    int dim;
  };
  std::vector<Case> cases = {
      {"case_i_model", {}, 6, 8},
      {"case_i_deformed", {{"a", rat(1)}}, 7, 8},
      {"ea", {{"a", rat(1)}}, 7, 10},
      {"g2_model", {}, 5, 14},
      {"segre", {}, 4, 4},
      {"veronese_n2", {}, 4, 6},
      {"veronese_n3", {}, 4, 10},
      {"ode_2", {}, 4, 3},
      {"ode_4", {}, 6, 5},
  };
  for (const auto& c : cases) {
    auto sys = fx_at(c.name, c.params);
    auto sol = formal_solutions(sys, c.n);
    CHECK(sol.basis.size() == c.dim);
    CHECK(sol.stable);
  }
  // truncation below the order is rejected
  CHECK_THROWS(formal_solutions(fx_at("ea", {{"a", rat(1)}}), 2));
}

TEST_CASE("computed solutions match the published bases up to change of basis") {
  auto fea = fx("ea");
  auto ea1 = bind_params(fea, {{"a", rat(1)}});
  auto sol = formal_solutions(ea1, 7);
  std::vector<Poly<Rat>> pub;
  for (auto& p : parse_poly_list(*fixture_basis_text("ea"), fea)) pub.push_back(bind_poly(p, fea, {{"a", rat(1)}}));
  CHECK(same_poly_span(sol.basis, pub));

  auto seg = fx("segre");
  auto segb = bind_params(seg, {});
  auto ssol = formal_solutions(segb, 4);
  std::vector<Poly<Rat>> spub;
  for (auto& p : parse_poly_list(*fixture_basis_text("segre"), seg)) spub.push_back(bind_poly(p, seg, {}));
  CHECK(same_poly_span(ssol.basis, spub));
}

TEST_CASE("verify_basis accepts the published bases with the parameter symbolic") {
  for (const char* name : {"ea", "case_i_deformed", "g2_model", "segre"}) {
    auto sys = fx(name);
    auto symbolic = bind_params_symbolic(sys, {});
    std::vector<Poly<RatFunc>> basis;
    for (auto& p : parse_poly_list(*fixture_basis_text(name), sys)) basis.push_back(bind_poly_symbolic(p, sys, {}));
    auto rep = verify_basis(symbolic, basis);
    CHECK(rep.ok);
  }
}

TEST_CASE("verify_basis rejects the undeformed monomials against the deformed system") {
  auto fea = fx("ea");
  auto symbolic = bind_params_symbolic(fea, {});
  // monomial basis of E_0
  auto zero_basis = parse_poly_list("1\nx\ny\nz\nx^2\nx*y\nx*z\ny^2\ny*z\nz^2\n", fea);
  auto rep = verify_basis(symbolic, zero_basis);
  CHECK_FALSE(rep.ok);
  // the offending element is y^2 against the deformed equation: residual -2a
  CHECK(rep.equation == 0);
  CHECK(rep.element == 7);
  REQUIRE(rep.residual.t.size() == 1);
  RatFunc r = rep.residual.t.begin()->second;
  RatFunc minus2a = RatFunc(rat(-2)) * RatFunc::var();
  CHECK(r == minus2a);
}

TEST_CASE("prolonged relations of the deformed system") {
  auto fea = fx("ea");
  auto sys = bind_params_symbolic(fea, {});
  const auto& sp = sys.space;
  int X = sp.field_index("X"), Y = sp.field_index("Y"), Z = sp.field_index("Z");
  RatFunc a = RatFunc::var();

  auto rel5 = prolong_relations(sys, 5);
  CHECK(rel5.compatible);
  // standard monomials = the 10 complementary ones
  CHECK(rel5.standard_monomials.size() == 10);

  auto val = [&](const std::vector<int>& word) { return reduce_word(sys, rel5, word); };
  auto mono = [&](std::initializer_list<int> exps) { return Mono(exps); };  // (X,Y,Z) exponents

  // order 3: X^2 Y = -XZ and its partner X Y^2 = -YZ (the composition Y^2 X
  // reduces to +YZ; checked directly on the solution basis as well)
  {
    auto v = val({X, X, Y});
    REQUIRE(v.size() == 1);
    CHECK(v[0].first == mono({1, 0, 1}));
    CHECK(v[0].second == RatFunc(rat(-1)));
    auto w = val({X, Y, Y});
    REQUIRE(w.size() == 1);
    CHECK(w[0].first == mono({0, 1, 1}));
    CHECK(w[0].second == RatFunc(rat(-1)));
    auto u = val({Y, Y, X});
    REQUIRE(u.size() == 1);
    CHECK(u[0].first == mono({0, 1, 1}));
    CHECK(u[0].second == RatFunc(rat(1)));
    // direct check on a published solution: u = z^2 + a/120 x^5
    auto basis = parse_poly_list(*fixture_basis_text("ea"), fea);
    auto zsq = bind_poly_symbolic(basis[9], fea, {});
    Poly<RatFunc> lhs = sp.apply_word({Y, Y, X}, zsq);
    Poly<RatFunc> rhs = sp.apply_word({Y, Z}, zsq);
    CHECK(lhs == rhs);
    Poly<RatFunc> lhs2 = sp.apply_word({X, Y, Y}, zsq);
    CHECK(lhs2 == -rhs);
  }
  // order 4: X^2Y^2 = 1/2 Z^2, XYZ = -1/2 Z^2, X^4 = -a YZ, X^3Y = 0, Y^4 = 0,
  // X^2Z = 0, Y^2Z = 0, XY^3 = 0
  {
    auto v = val({X, X, Y, Y});
    REQUIRE(v.size() == 1);
    CHECK(v[0].first == mono({0, 0, 2}));
    CHECK(v[0].second == RatFunc(rat(1, 2)));
    auto w = val({X, Y, Z});
    REQUIRE(w.size() == 1);
    CHECK(w[0].first == mono({0, 0, 2}));
    CHECK(w[0].second == RatFunc(rat(-1, 2)));
    auto u = val({X, X, X, X});
    REQUIRE(u.size() == 1);
    CHECK(u[0].first == mono({0, 1, 1}));
    CHECK(u[0].second == -a);
    CHECK(val({X, X, X, Y}).empty());
    CHECK(val({Y, Y, Y, Y}).empty());
    CHECK(val({X, X, Z}).empty());
    CHECK(val({Y, Y, Z}).empty());
    CHECK(val({X, Y, Y, Y}).empty());
  }
  // order 5: X^5 = a/2 Z^2, everything else of weighted order 5 vanishes
  {
    auto v = val({X, X, X, X, X});
    REQUIRE(v.size() == 1);
    CHECK(v[0].first == mono({0, 0, 2}));
    CHECK(v[0].second == RatFunc(rat(1, 2)) * a);
    for (const auto& r : rel5.rules) {
      Envelope<RatFunc> env(sp);
      if (env.wdeg(r.monomial) != 5) continue;
      if (r.monomial == mono({5, 0, 0})) continue;
      CHECK(r.value.empty());
    }
  }
  // order 6: all weighted-order-6 monomials vanish on solutions
  {
    auto rel6 = prolong_relations(sys, 6);
    CHECK(rel6.compatible);
    Envelope<RatFunc> env(sp);
    for (const auto& r : rel6.rules) {
      if (env.wdeg(r.monomial) != 6) continue;
      CHECK(r.value.empty());
    }
  }
}

TEST_CASE("incompatible systems are reported with a witness") {
  // perturbing the deformed cubic system by a lower-order term breaks the
  // involutive profile: the solution space drops from 10 to 9
  std::string text =
      "coord x 1\n"
      "coord y 1\n"
      "coord z 2\n"
      "field X : x -> 1 ; z -> 1/2*y\n"
      "field Y : y -> 1 ; z -> -1/2*x\n"
      "field Z : z -> 1\n"
      "eq X.X.X = Y.Y + Z\n"
      "eq X.Y.X = 0\n"
      "eq Y.X.Y = 0\n"
      "eq Y.Y.Y = 0\n";
  auto sys = bind_params(parse_system(text), {});
  auto rel = prolong_relations(sys, 6);
  CHECK_FALSE(rel.compatible);
  REQUIRE(rel.witness.has_value());
  // the witness genuinely annihilates all solutions: check against the
  // solution space directly
  auto sol = formal_solutions(sys, 7);
  CHECK(sol.basis.size() == 9);
  for (const auto& p : sol.basis) {
    Poly<Rat> acc;
    for (const auto& [mo, c] : *rel.witness) {
      auto w = Envelope<Rat>::mono_word(mo);
      acc = acc + c * sys.space.apply_word(w, p);
    }
    CHECK(acc.zero());
  }
  // and the deformed-but-compatible system is not flagged
  auto good = bind_params(parse_system(*fixture_text("case_i_deformed")), {{"a", rat(3)}});
  CHECK(prolong_relations(good, 6).compatible);
}

TEST_CASE("filtration duality") {
  // type (4,3,1) at steps -2,-1,0
  Filtration phi;
  phi.n = 4;
  phi.pmin = -2;
  phi.pmax = 0;
  Mat<Rat> s1(3, 4), s0(1, 4);
  s1.at(0, 0) = 1;
  s1.at(1, 1) = 1;
  s1.at(2, 2) = 1;
  s0.at(0, 0) = 1;
  phi.steps[-1] = s1;
  phi.steps[0] = s0;
  phi.validate();

  auto dual = dualize_filtration(phi);
  CHECK(dual.pmin == 0);
  CHECK(dual.pmax == 2);
  CHECK(dual.type() == std::vector<int>{4, 3, 1});

  // double dual returns the original
  auto dd = dualize_filtration(dual);
  CHECK(dd.pmin == phi.pmin);
  CHECK(dd.pmax == phi.pmax);
  for (int p = phi.pmin; p <= phi.pmax; ++p) {
    Echelon<Rat> a(4), b(4);
    auto ma = phi.step(p);
    auto mb = dd.step(p);
    for (int r = 0; r < ma.rows; ++r) {
      std::vector<Rat> v(4);
      for (int c = 0; c < 4; ++c) v[c] = ma.at(r, c);
      a.add(std::move(v));
    }
    for (int r = 0; r < mb.rows; ++r) {
      std::vector<Rat> v(4);
      for (int c = 0; c < 4; ++c) v[c] = mb.at(r, c);
      b.add(std::move(v));
    }
    CHECK(a.same_span(b));
  }

  // gr pairing: nondegenerate iff p + q = 0
  for (int p = phi.pmin; p <= phi.pmax; ++p)
    for (int q = dual.pmin; q <= dual.pmax; ++q) {
      auto m = gr_pairing(phi, dual, p, q);
      if (p + q == 0) {
        CHECK(m.rows == m.cols);
        CHECK_FALSE(is_zero(det(m)));
      } else {
        CHECK(m.is_zero_mat());
      }
    }

  // non-saturated input is rejected
  Filtration bad = phi;
  bad.steps[-2] = s1;  // bottom step no longer everything
  CHECK_THROWS(dualize_filtration(bad));
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_system("coord x 1\nfield X : y -> 1\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_system("coord x 0\n"), ParseError);
  CHECK_THROWS_AS(parse_system("junk\n"), ParseError);
  // unbound parameter is rejected at binding
  auto sys = fx("ea");
  CHECK_THROWS(bind_params(sys, {}));
  CHECK_THROWS(bind_params(sys, {{"b", rat(1)}}));
  // unknown field names are rejected
  auto ea = fx_at("ea", {{"a", rat(1)}});
  CHECK_THROWS(ea.space.field_index("Q"));
}
