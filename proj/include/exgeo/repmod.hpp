#pragma once

#include <map>
#include <memory>
#include <vector>

#include "exgeo/gradedlie.hpp"

namespace exgeo {

using GPtr = std::shared_ptr<const GradedLieAlgebra>;

// Finite-dimensional module with explicit action matrices, one per basis
// element of the acting algebra. Weights are per-basis-vector omega
// coordinates; degrees are grading-element eigenvalues plus a shift.
struct GradedModule {
  GPtr g;
  int dim = 0;
  std::vector<Mat<Rat>> action;
  std::vector<std::vector<Rat>> weights;  // omega-coords per basis vector (may be empty)
  std::vector<Rat> degrees;               // may be empty when the algebra is ungraded
  Weight highest_weight;
  Rat shift;
  Mat<Rat> gram;  // contravariant form, positive definite (may be empty)

  const Mat<Rat>& act(int basis_index) const { return action[basis_index]; }
};

// Weyl dimension formula, exact.
Int weyl_dim(const RootSystem& rs, const Weight& lambda);

// Weight multiplicities of the irreducible module via Freudenthal's recursion;
// keys are omega-coordinate vectors.
std::map<std::vector<Rat>, Int> weight_multiplicities(const RootSystem& rs, const Weight& lambda);

// Irreducible highest-weight module built by lowering operators with exact
// contravariant-form filtering. Rejects non-dominant weights.
GradedModule irrep(GPtr g, const Weight& lambda);

// Degree labels = grading-element eigenvalues + shift.
GradedModule grade_module(GradedModule v, const Rat& shift);
// Shift normalizing the grading to top degree -1.
Rat default_shift(const GradedModule& v);

// Decomposition of an arbitrary module (given by action matrices) into
// irreducible highest weights with multiplicities, by exact weight-splitting
// and greedy highest-weight subtraction.
std::vector<std::pair<Weight, int>> decompose(const GPtr& g, const std::vector<Mat<Rat>>& action, int dim);
std::vector<std::pair<Weight, int>> decompose(const GradedModule& m);

// Multiplicity of nu inside lambda (x) mu.
Int tensor_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu);

// Greedy decomposition of a bare weight-multiplicity function.
std::vector<std::pair<Weight, Int>> greedy_decompose(const RootSystem& rs, std::map<std::vector<Rat>, Int> wm);

// Lowest weight of the irreducible with highest weight lambda (w0 action),
// and the inverse bridge.
Weight lowest_of_highest(const RootSystem& rs, const Weight& lambda);
Weight highest_of_lowest(const RootSystem& rs, const Weight& mu);

bool is_dominant(const RootSystem& rs, const Weight& w);

}  // namespace exgeo
