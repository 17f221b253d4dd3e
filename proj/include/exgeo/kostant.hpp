#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exgeo/rootsys.hpp"

namespace exgeo {

// One predicted irreducible piece of H^1(g_-, U) attached to a simple
// reflection from the grading set.
struct H1Component {
  int reflecting_root;  // 1-based simple index, in sigma
  Weight lowest_weight; // sigma_alpha(mu) + alpha, omega-coordinates
  Rat degree;           // internal degree, exact
  Int dimension;        // of the g_0-irreducible with that lowest weight
};

// Components of H^1 for the irreducible module of lowest weight mu (all
// omega-coordinates must be non-positive integers).
std::vector<H1Component> h1_components(const RootSystem& rs, const std::vector<int>& sigma, const Weight& mu);

enum class Rigidity { RigidForAllIrreps, Exceptional };

// Strict positivity of sum_{k in sigma} p_{ik} - 1 over i in sigma.
Rigidity rigidity_classify(const RootSystem& rs, const std::vector<int>& sigma);

// Report for the exceptional cases: when positive-degree H^1 components can
// occur and at which degree.
struct PositiveH1Report {
  bool nonempty = false;
  Rat degree;               // meaningful when nonempty
  std::string condition;    // human-readable constraint on mu for this case
  std::vector<H1Component> components;  // the positive-degree components of mu
};

PositiveH1Report positive_h1_table(const RootSystem& rs, const std::vector<int>& sigma, const Weight& mu);

// Degrees >= 1 with a predicted component, with total dimensions.
std::vector<std::pair<Rat, Int>> h1_positive_prediction(const RootSystem& rs, const std::vector<int>& sigma,
                                                        const Weight& mu);

}  // namespace exgeo
