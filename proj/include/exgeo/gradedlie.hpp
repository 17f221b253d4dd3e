#pragma once

#include <vector>

#include "exgeo/matrix.hpp"
#include "exgeo/rootsys.hpp"

namespace exgeo {

using SparseVec = std::vector<std::pair<int, Rat>>;

struct LieBasisElem {
  enum class Kind { Cartan, EPos, ENeg };
  Kind kind = Kind::Cartan;
  std::vector<int> root;  // positive root in alpha-coordinates (EPos/ENeg)
  int cartan_index = -1;  // 0-based simple index for Cartan elements
  Rat degree;             // 0 until a grading is imposed

  // How this element is produced from Chevalley generators; used to extend
  // representations given on the generators only.
  //   Cartan h_i:         scale * [e_i, f_i] with scale = 1
  //   simple e_i / f_i:   generator (simple_index >= 0)
  //   other root vectors: scale * [basis[rec_x], basis[rec_y]]
  int simple_index = -1;
  int rec_x = -1, rec_y = -1;
  Rat rec_scale = Rat(1);
};

// Semisimple Lie algebra in a Chevalley basis with an optional parabolic
// grading. Basis order: h_1..h_l, then e_gamma by root order, then f_gamma.
struct GradedLieAlgebra {
  RootSystem rs;
  std::vector<LieBasisElem> basis;
  std::vector<std::vector<SparseVec>> brk;  // brk[i][j] = [b_i, b_j]
  std::vector<int> sigma;                   // grading subset, 1-based, sorted; empty = ungraded
  std::vector<Rat> grading_element;         // E in the h-basis (empty when ungraded)

  int dim() const { return static_cast<int>(basis.size()); }
  int h_index(int i) const { return i; }                                    // 0-based simple index
  int e_index(int root_pos) const { return rs.rank + root_pos; }            // index into positive_roots
  int f_index(int root_pos) const { return rs.rank + static_cast<int>(rs.positive_roots.size()) + root_pos; }

  const SparseVec& bracket(int i, int j) const { return brk[i][j]; }
  std::vector<Rat> bracket_vec(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

  // E-eigenvalue of a weight given in omega-coordinates.
  Rat weight_degree(const std::vector<Rat>& omega_coords) const;

  std::vector<int> indices_of_degree(const Rat& p) const;
  std::vector<int> negative_indices() const;  // degree < 0, ascending by degree
  Rat min_degree() const;
  Rat max_degree() const;
};

// Chevalley basis with exact integral structure constants; degrees all 0.
GradedLieAlgebra chevalley_algebra(const RootSystem& rs);

// Imposes the parabolic grading determined by the subset sigma (1-based
// simple-root indices). Computes the grading element E.
GradedLieAlgebra parabolic_grading(const GradedLieAlgebra& g, const std::vector<int>& sigma);

// Killing form B(b_i, b_j) = tr(ad b_i ad b_j).
Mat<Rat> killing_form(const GradedLieAlgebra& g);

// theta(e) = -f, theta(f) = -e, theta(h) = -h, as a matrix on the basis.
Mat<Rat> theta_involution(const GradedLieAlgebra& g);

// dim g_{-2} = 1 and the bracket Lambda^2 g_{-1} -> g_{-2} is non-degenerate.
bool is_contact_grading(const GradedLieAlgebra& g);

}  // namespace exgeo
