#include <doctest.h>

#include <map>

#include "exgeo/gradedlie.hpp"

using namespace exgeo;

namespace {

GradedLieAlgebra make(Family f, int rank) { return chevalley_algebra(build_root_system(f, rank)); }

void check_jacobi(const GradedLieAlgebra& g) {
  int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::vector<Rat> acc(n, Rat(0));
        auto add_term = [&](int a, int b, int c) {
          // [[a,b],c]
          for (const auto& [m, w] : g.brk[a][b])
            for (const auto& [t, w2] : g.brk[m][c]) acc[t] += w * w2;
        };
        add_term(i, j, k);
        add_term(j, k, i);
        add_term(k, i, j);
        for (const auto& v : acc) REQUIRE(is_zero(v));
      }
}

std::map<long, int> graded_dims(const GradedLieAlgebra& g) {
  std::map<long, int> d;
  for (const auto& b : g.basis) {
    REQUIRE(b.degree.get_den() == 1);
    d[b.degree.get_num().get_si()] += 1;
  }
  return d;
}

}  // namespace

TEST_CASE("dimensions of chevalley algebras") {
  CHECK(make(Family::A, 2).dim() == 8);
  CHECK(make(Family::C, 2).dim() == 10);
  CHECK(make(Family::G2, 2).dim() == 14);
  CHECK(make(Family::A, 1).dim() == 3);
  CHECK(make(Family::B, 3).dim() == 21);
  CHECK(make(Family::D, 4).dim() == 28);
}

TEST_CASE("structure constants are integral") {
  for (auto g : {make(Family::A, 3), make(Family::B, 3), make(Family::C, 3), make(Family::D, 4), make(Family::G2, 2)}) {
    for (int i = 0; i < g.dim(); ++i)
      for (int j = 0; j < g.dim(); ++j)
        for (const auto& [k, c] : g.brk[i][j]) CHECK(c.get_den() == 1);
  }
}

TEST_CASE("Jacobi identity holds exactly on all basis triples") {
  check_jacobi(make(Family::A, 2));
  check_jacobi(make(Family::C, 2));
  check_jacobi(make(Family::G2, 2));
  check_jacobi(make(Family::A, 3));
  check_jacobi(make(Family::B, 3));
  check_jacobi(make(Family::D, 4));
}

TEST_CASE("parabolic grading fixtures pin the conventions") {
  auto a2 = parabolic_grading(make(Family::A, 2), {1, 2});
  auto da = graded_dims(a2);
  CHECK(da == std::map<long, int>{{-2, 1}, {-1, 2}, {0, 2}, {1, 2}, {2, 1}});

  auto c2 = parabolic_grading(make(Family::C, 2), {1});
  auto dc = graded_dims(c2);
  CHECK(dc == std::map<long, int>{{-2, 1}, {-1, 2}, {0, 4}, {1, 2}, {2, 1}});

  // pins the G2 simple-root labeling: alpha_2 gives the contact grading
  auto g2 = parabolic_grading(make(Family::G2, 2), {2});
  auto dg = graded_dims(g2);
  CHECK(dg == std::map<long, int>{{-2, 1}, {-1, 4}, {0, 4}, {1, 4}, {2, 1}});

  CHECK(is_contact_grading(a2));
  CHECK(is_contact_grading(c2));
  CHECK(is_contact_grading(g2));
  CHECK_FALSE(is_contact_grading(parabolic_grading(make(Family::A, 2), {1})));
  CHECK_THROWS(parabolic_grading(make(Family::A, 2), {}));
}

TEST_CASE("grading element reproduces the grading and brackets add degrees") {
  for (auto g : {parabolic_grading(make(Family::A, 2), {1, 2}), parabolic_grading(make(Family::C, 2), {1}),
                 parabolic_grading(make(Family::G2, 2), {2}), parabolic_grading(make(Family::B, 3), {2})}) {
    int n = g.dim();
    // E as a coordinate vector over the basis (h-part only)
    std::vector<Rat> E(n, Rat(0));
    for (int i = 0; i < g.rs.rank; ++i) E[i] = g.grading_element[i];
    for (int j = 0; j < n; ++j) {
      std::vector<Rat> x(n, Rat(0));
      x[j] = 1;
      auto br = g.bracket_vec(E, x);
      for (int k = 0; k < n; ++k) {
        Rat expect = k == j ? g.basis[j].degree : Rat(0);
        CHECK(br[k] == expect);
      }
    }
    // degree additivity: [g_p, g_q] in g_{p+q}
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (const auto& [k, c] : g.brk[i][j]) {
          CHECK(g.basis[k].degree == g.basis[i].degree + g.basis[j].degree);
        }
  }
}

TEST_CASE("killing form pairs opposite degrees only") {
  auto g = parabolic_grading(make(Family::A, 2), {1, 2});
  auto B = killing_form(g);
  int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!is_zero(g.basis[i].degree + g.basis[j].degree)) CHECK(is_zero(B.at(i, j)));
  // nondegenerate on g_i x g_{-i}
  for (long p : {0L, 1L, 2L}) {
    auto up = g.indices_of_degree(Rat(p));
    auto dn = g.indices_of_degree(Rat(-p));
    REQUIRE(up.size() == dn.size());
    Mat<Rat> blk(static_cast<int>(up.size()), static_cast<int>(dn.size()));
    for (size_t a = 0; a < up.size(); ++a)
      for (size_t b = 0; b < dn.size(); ++b) blk.at(static_cast<int>(a), static_cast<int>(b)) = B.at(up[a], dn[b]);
    CHECK_FALSE(is_zero(det(blk)));
  }
  // invariance B([x,y],z) + B(y,[x,z]) = 0 on basis triples
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Rat s(0);
        for (const auto& [m, c] : g.brk[x][y]) s += c * B.at(m, z);
        for (const auto& [m, c] : g.brk[x][z]) s += c * B.at(y, m);
        CHECK(is_zero(s));
      }
}

TEST_CASE("sl2 killing form value") {
  auto g = make(Family::A, 1);
  auto B = killing_form(g);
  // basis: h, e, f
  CHECK(B.at(0, 0) == 8);
  CHECK(is_zero(B.at(1, 1)));
  CHECK(!is_zero(B.at(1, 2)));
}

TEST_CASE("theta involution") {
  auto g = parabolic_grading(make(Family::A, 2), {1, 2});
  auto th = theta_involution(g);
  CHECK((th * th) == Mat<Rat>::identity(g.dim()));
  // theta(E) = -E
  std::vector<Rat> E(g.dim(), Rat(0));
  for (int i = 0; i < g.rs.rank; ++i) E[i] = g.grading_element[i];
  auto tE = th.apply(E);
  for (int i = 0; i < g.dim(); ++i) CHECK(tE[i] == -E[i]);
  // theta is an automorphism: theta[x,y] = [theta x, theta y]
  int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Rat> ei(n, Rat(0)), ej(n, Rat(0));
      ei[i] = 1;
      ej[j] = 1;
      auto lhs = th.apply(g.bracket_vec(ei, ej));
      auto rhs = g.bracket_vec(th.apply(ei), th.apply(ej));
      CHECK(lhs == rhs);
    }
  // Gram of -B(.,theta .) is positive definite: exact leading-minors test
  auto B = killing_form(g);
  Mat<Rat> G = -(B * th);
  for (int k = 1; k <= g.dim(); ++k) {
    Mat<Rat> minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor.at(i, j) = G.at(i, j);
    CHECK(det(minor) > 0);
  }
}
