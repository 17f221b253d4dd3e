#include <doctest.h>

#include "exgeo/rootsys.hpp"

using namespace exgeo;

namespace {
long expected_count(Family f, int l) {
  switch (f) {
    case Family::A: return static_cast<long>(l) * (l + 1) / 2;
    case Family::B:
    case Family::C: return static_cast<long>(l) * l;
    case Family::D: return static_cast<long>(l) * (l - 1);
    case Family::G2: return 6;
  }
  return -1;
}
}  // namespace

TEST_CASE("positive root counts match the closed forms") {
  for (int l = 1; l <= 6; ++l) CHECK(build_root_system(Family::A, l).positive_roots.size() == expected_count(Family::A, l));
  for (int l = 2; l <= 6; ++l) CHECK(build_root_system(Family::B, l).positive_roots.size() == expected_count(Family::B, l));
  for (int l = 2; l <= 6; ++l) CHECK(build_root_system(Family::C, l).positive_roots.size() == expected_count(Family::C, l));
  for (int l = 4; l <= 6; ++l) CHECK(build_root_system(Family::D, l).positive_roots.size() == expected_count(Family::D, l));
  CHECK(build_root_system(Family::G2, 2).positive_roots.size() == 6);
}

TEST_CASE("Cartan times inverse is the identity, entries positive") {
  std::vector<RootSystem> all;
  for (int l = 1; l <= 6; ++l) all.push_back(build_root_system(Family::A, l));
  for (int l = 2; l <= 6; ++l) all.push_back(build_root_system(Family::B, l));
  for (int l = 2; l <= 6; ++l) all.push_back(build_root_system(Family::C, l));
  for (int l = 4; l <= 6; ++l) all.push_back(build_root_system(Family::D, l));
  all.push_back(build_root_system(Family::G2, 2));
  for (const auto& rs : all) {
    CHECK((rs.cartan * rs.inverse_cartan) == Mat<Rat>::identity(rs.rank));
    for (int i = 0; i < rs.rank; ++i) {
      CHECK(rs.cartan.at(i, i) == 2);
      for (int j = 0; j < rs.rank; ++j) {
        if (i != j) CHECK(rs.cartan.at(i, j) <= 0);
        CHECK(rs.inverse_cartan.at(i, j) > 0);
      }
    }
  }
}

TEST_CASE("frozen inverse Cartan fixtures") {
  auto a2 = build_root_system(Family::A, 2);
  CHECK(a2.inverse_cartan.at(0, 0) == rat(2, 3));
  CHECK(a2.inverse_cartan.at(0, 1) == rat(1, 3));
  CHECK(a2.inverse_cartan.at(1, 0) == rat(1, 3));
  CHECK(a2.inverse_cartan.at(1, 1) == rat(2, 3));

  auto c2 = build_root_system(Family::C, 2);
  CHECK(c2.inverse_cartan.at(0, 0) == 1);  // p_11 = 1

  auto g2 = build_root_system(Family::G2, 2);
  CHECK(det(g2.cartan) == 1);
  CHECK(g2.inverse_cartan.at(0, 0) == 2);
  CHECK(g2.inverse_cartan.at(0, 1) == 1);
  CHECK(g2.inverse_cartan.at(1, 0) == 3);
  CHECK(g2.inverse_cartan.at(1, 1) == 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(g2.inverse_cartan.at(i, j) >= 1);
}

TEST_CASE("simple reflections") {
  auto a2 = build_root_system(Family::A, 2);
  // sigma_1(omega_1) = omega_1 - alpha_1
  Weight w = reflect(a2, a2.fundamental_weight(1), 1);
  CHECK(w.coords == std::vector<Rat>{rat(-1), rat(1)});
  // fixes omega_2
  CHECK(reflect(a2, a2.fundamental_weight(2), 1) == a2.fundamental_weight(2));
  // linearity: sigma_1(3 omega_1) = 3 omega_1 - 3 alpha_1
  Weight w3 = reflect(a2, Weight::omega({rat(3), rat(0)}), 1);
  CHECK(w3.coords == std::vector<Rat>{rat(-3), rat(3)});

  // involution on a sample of weights, all fixtures
  std::vector<RootSystem> all = {a2, build_root_system(Family::B, 3), build_root_system(Family::C, 2),
                                 build_root_system(Family::D, 4), build_root_system(Family::G2, 2)};
  for (const auto& rs : all) {
    std::vector<Weight> sample = {rs.rho()};
    for (int i = 1; i <= rs.rank; ++i) sample.push_back(rs.fundamental_weight(i));
    sample.push_back(Weight::omega(std::vector<Rat>(rs.rank, rat(-2))));
    for (const auto& s : sample)
      for (int i = 1; i <= rs.rank; ++i) CHECK(reflect(rs, reflect(rs, s, i), i) == s);
  }
  CHECK_THROWS(reflect(a2, a2.rho(), 3));
}

TEST_CASE("basis conversions round-trip exactly") {
  for (auto rs : {build_root_system(Family::B, 4), build_root_system(Family::G2, 2)}) {
    Weight w = Weight::omega({rat(5, 3), rat(-7)});
    w.coords.resize(rs.rank, rat(1, 2));
    Weight back = rs.in_omega(rs.in_alpha(w));
    CHECK(back == w);
  }
}

TEST_CASE("rank validation and the D3 alias") {
  CHECK_THROWS(build_root_system(Family::A, 0));
  CHECK_THROWS(build_root_system(Family::B, 1));
  CHECK_THROWS(build_root_system(Family::C, 1));
  CHECK_THROWS(build_root_system(Family::D, 2));
  CHECK_THROWS(build_root_system(Family::G2, 3));
  auto d3 = build_root_system(Family::D, 3);
  CHECK(d3.family == Family::A);
  CHECK(d3.rank == 3);
  CHECK(d3.positive_roots.size() == 6);
}
