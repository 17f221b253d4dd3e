#pragma once

#include <map>

#include "exgeo/repmod.hpp"
#include "exgeo/subspace.hpp"

namespace exgeo {

// Graded subspace of n x n matrices; every basis element is degree-homogeneous
// for the grading of gl(V) induced by the module grading of V.
struct GradedSubspace {
  int n = 0;
  struct Elem {
    Rat degree;
    Mat<Rat> mat;
  };
  std::vector<Elem> elems;

  int dim() const { return static_cast<int>(elems.size()); }
  std::map<Rat, int> dims_by_degree() const;
  std::map<Rat, std::vector<int>> indices_by_degree() const;
};

// Graded ambient algebra of matrices: the full gl(V), or a graded subalgebra
// of it cut out per degree (o(V,kappa)).
struct GradedAmbient {
  int n = 0;
  std::vector<Rat> vdeg;                                  // degree of each V basis vector
  std::map<Rat, std::vector<std::pair<int, int>>> gl_pairs;  // (row,col) pairs per gl degree
  bool restricted = false;
  std::map<Rat, Mat<Rat>> sub_basis;  // rows = basis of the degree block over gl_pairs

  Rat max_degree() const;
  int block_dim(const Rat& d) const;
  Mat<Rat> block_element(const Rat& d, int k) const;  // k-th basis matrix of the block
  int dim() const;
  bool contains(const Rat& d, const Mat<Rat>& m) const;
};

std::vector<Rat> flatten(const Mat<Rat>& m);

GradedAmbient ambient_gl(const GradedModule& v);

// Invariant symmetric bilinear form on an irreducible self-dual module;
// throws when the space of such forms is not 1-dimensional.
Mat<Rat> invariant_symmetric_form(const GradedModule& v);

GradedAmbient ambient_o(const GradedModule& v);
GradedAmbient ambient_o(const GradedModule& v, const Mat<Rat>& kappa);

// Images of the algebra under the representation, with gl degrees.
GradedSubspace algebra_image(const GradedModule& v);
GradedSubspace negative_image(const GradedModule& v);  // rho(g_-) only

// Relative prolongation of g_- inside the graded ambient l: the maximal
// graded subalgebra of l with the prescribed negative part, computed degree
// by degree as the kernel of the bracket conditions. Throws when g_- is not
// bracket-closed or does not lie in l.
GradedSubspace relative_prolongation(const GradedSubspace& g_minus, const GradedAmbient& l);

// Centralizer of a set of matrices inside gl(V), graded by the ambient.
GradedSubspace centralizer(const std::vector<Mat<Rat>>& generators, const GradedAmbient& gl);

// Trace-orthogonal complement of sub inside the ambient; graded, and the
// direct-sum property is verified (degenerate trace restriction is signalled).
GradedSubspace trace_complement(const GradedSubspace& sub, const GradedAmbient& l);

GradedSubspace direct_sum(const GradedSubspace& a, const GradedSubspace& b);
bool same_graded_span(const GradedSubspace& a, const GradedSubspace& b);

// Packages a g-invariant matrix subspace as a module over g: action by
// commutator, degrees from the subspace, Gram tr(A B*) with B* adjoint for
// the contravariant product on V.
GradedModule matrix_subspace_module(const GPtr& g, const GradedModule& v, const GradedSubspace& u);

}  // namespace exgeo
