#pragma once

#include <string>
#include <vector>

#include "exgeo/matrix.hpp"
#include "exgeo/rational.hpp"

namespace exgeo {

enum class Family { A, B, C, D, G2 };

std::string family_name(Family f);
Family parse_family(const std::string& s);

// Weights are stored in fundamental-weight ("omega") or simple-root ("alpha")
// coordinates; conversions go through the Cartan matrix and are exact.
struct Weight {
  enum class Basis { Omega, Alpha };
  Basis basis = Basis::Omega;
  std::vector<Rat> coords;

  Weight() = default;
  Weight(Basis b, std::vector<Rat> c) : basis(b), coords(std::move(c)) {}
  static Weight omega(std::vector<Rat> c) { return Weight(Basis::Omega, std::move(c)); }
  static Weight alpha(std::vector<Rat> c) { return Weight(Basis::Alpha, std::move(c)); }
  bool operator==(const Weight& o) const { return basis == o.basis && coords == o.coords; }
};

struct RootSystem {
  Family family;
  int rank;
  Mat<Rat> cartan;          // cartan.at(i,j) = <alpha_i, alpha_j-coroot>
  Mat<Rat> inverse_cartan;  // exact inverse, all entries positive
  std::vector<std::vector<int>> positive_roots;  // alpha-coordinates, height order
  std::vector<Rat> d;       // half squared root lengths: (a_i,a_j) = cartan(i,j)*d[j]

  // invariant inner product on weights given in alpha-coordinates
  Rat ip_alpha(const std::vector<Rat>& u, const std::vector<Rat>& v) const;

  std::vector<Rat> omega_to_alpha(const std::vector<Rat>& v) const;
  std::vector<Rat> alpha_to_omega(const std::vector<Rat>& u) const;
  Weight in_omega(const Weight& w) const;
  Weight in_alpha(const Weight& w) const;

  Weight rho() const;                         // all omega-coordinates 1
  Weight fundamental_weight(int i) const;     // omega basis vector (1-based)
  Weight simple_root(int i) const;            // alpha basis vector (1-based)

  // <w, alpha_i-coroot> for w in either basis (1-based i)
  Rat pairing_coroot(const Weight& w, int i) const;

  bool is_positive_root(const std::vector<int>& a) const;
  int root_height(const std::vector<int>& a) const;
  // (alpha,alpha)/2 for a root in alpha-coordinates
  Rat half_norm(const std::vector<int>& a) const;
};

// Builds a root system; validates admissible rank. D3 is accepted as an alias
// of A3.
RootSystem build_root_system(Family family, int rank);

Mat<Rat> inverse_cartan(const RootSystem& rs);

// Simple reflection sigma_{alpha_i} applied to w (1-based i); result in the
// same basis as the input.
Weight reflect(const RootSystem& rs, const Weight& w, int i);

}  // namespace exgeo
