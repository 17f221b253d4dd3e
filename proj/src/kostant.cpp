#include "exgeo/kostant.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace exgeo {

namespace {

void check_sigma(const RootSystem& rs, const std::vector<int>& sigma) {
  if (sigma.empty()) throw std::invalid_argument("grading subset must be nonempty");
  for (int s : sigma)
    if (s < 1 || s > rs.rank) throw std::out_of_range("grading subset index out of range");
}

bool in_sigma(const std::vector<int>& sigma, int i) {
  return std::find(sigma.begin(), sigma.end(), i) != sigma.end();
}

// dimension of the irreducible g_0-module with the given lowest weight:
// Weyl formula over the positive roots supported away from sigma.
Int g0_dim(const RootSystem& rs, const std::vector<int>& sigma, const Weight& lowest) {
  std::vector<Rat> hi = rs.in_omega(lowest).coords;
  for (auto& c : hi) c = -c;  // dual highest weight
  Rat prod(1);
  for (const auto& a : rs.positive_roots) {
    bool off_sigma = true;
    for (int s : sigma)
      if (a[s - 1] != 0) off_sigma = false;
    if (!off_sigma) continue;
    // <mu, alpha-coroot> = sum_k mu_k a_k d_k / d_alpha
    Rat num(0), den(0);
    for (int k = 0; k < rs.rank; ++k) {
      if (a[k] == 0) continue;
      num += (hi[k] + 1) * Rat(a[k]) * rs.d[k];
      den += Rat(a[k]) * rs.d[k];
    }
    prod *= num / den;
  }
  if (prod.get_den() != 1 || sgn(prod) <= 0)
    throw std::logic_error("g0 component dimension is not a positive integer");
  return prod.get_num();
}

}  // namespace

std::vector<H1Component> h1_components(const RootSystem& rs, const std::vector<int>& sigma, const Weight& mu_in) {
  check_sigma(rs, sigma);
  Weight mu = rs.in_omega(mu_in);
  for (const auto& c : mu.coords)
    if (sgn(c) > 0 || c.get_den() != 1)
      throw std::invalid_argument("h1_components: mu must be anti-dominant integral (lowest-weight convention)");

  std::vector<H1Component> out;
  for (int i : sigma) {
    // deg(sigma_i(mu)) = sum_{j != i} mu_j sum_{k in sigma} p_{jk}
    //                    + mu_i (sum_{k in sigma} p_{ik} - 1)
    Rat deg(0);
    for (int j = 1; j <= rs.rank; ++j) {
      Rat rowsum(0);
      for (int k : sigma) rowsum += rs.inverse_cartan.at(j - 1, k - 1);
      if (j == i) rowsum -= 1;
      deg += mu.coords[j - 1] * rowsum;
    }
    deg += 1;

    // lowest weight sigma_i(mu) + alpha_i
    Weight lw = reflect(rs, mu, i);
    for (int j = 0; j < rs.rank; ++j) lw.coords[j] += rs.cartan.at(i - 1, j);

    H1Component comp;
    comp.reflecting_root = i;
    comp.lowest_weight = lw;
    comp.degree = deg;
    comp.dimension = g0_dim(rs, sigma, lw);
    out.push_back(std::move(comp));
  }
  return out;
}

Rigidity rigidity_classify(const RootSystem& rs, const std::vector<int>& sigma) {
  check_sigma(rs, sigma);
  for (int i : sigma) {
    Rat s(0);
    for (int k : sigma) s += rs.inverse_cartan.at(i - 1, k - 1);
    if (!(s - 1 > 0)) return Rigidity::Exceptional;
  }
  return Rigidity::RigidForAllIrreps;
}

PositiveH1Report positive_h1_table(const RootSystem& rs, const std::vector<int>& sigma, const Weight& mu_in) {
  check_sigma(rs, sigma);
  if (rigidity_classify(rs, sigma) != Rigidity::Exceptional)
    throw std::invalid_argument("positive_h1_table: (family, sigma) is not in the exceptional list");
  Weight mu = rs.in_omega(mu_in);
  for (const auto& c : mu.coords)
    if (sgn(c) > 0 || c.get_den() != 1)
      throw std::invalid_argument("positive_h1_table: mu must be anti-dominant integral");

  PositiveH1Report rep;
  auto comps = h1_components(rs, sigma, mu);
  for (const auto& c : comps) {
    if (c.degree >= 1) {
      if (c.degree.get_den() != 1)
        throw std::logic_error("positive_h1_table: non-integer positive degree indicates a convention error");
      rep.nonempty = true;
      rep.degree = c.degree;
      rep.components.push_back(c);
    }
  }

  // descriptive constraint per the case analysis
  bool is_a = rs.family == Family::A;
  int l = rs.rank;
  if (is_a && sigma.size() == 1 && (sigma[0] == 1 || sigma[0] == l)) {
    rep.condition = "N = sum_{j>=2} (l+1-j) mu_j - mu_1 >= 0 and N a multiple of l+1 (degree N/(l+1)+1)";
  } else if (is_a && sigma.size() == 2 && sigma[0] == 1 && sigma[1] == l) {
    rep.condition = "mu supported on omega_1 only or on omega_l only (degree 1)";
  } else if (sigma.size() == 1) {
    rep.condition = "mu_i = 0 unless alpha_i in sigma (degree 1)";
  } else {
    rep.condition = "see component list";
  }
  return rep;
}

std::vector<std::pair<Rat, Int>> h1_positive_prediction(const RootSystem& rs, const std::vector<int>& sigma,
                                                        const Weight& mu) {
  std::map<Rat, Int> acc;
  for (const auto& c : h1_components(rs, sigma, mu))
    if (sgn(c.degree) > 0 && c.degree >= 1) acc[c.degree] += c.dimension;
  return {acc.begin(), acc.end()};
}

}  // namespace exgeo
