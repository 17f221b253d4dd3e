#include "exgeo/cohomology.hpp"

namespace exgeo {

CochainData<Rat> cochain_data(const GradedLieAlgebra& g, const GradedModule& u) {
  if (g.sigma.empty()) throw std::invalid_argument("cochain_data: algebra must be graded");
  if (u.degrees.empty()) throw std::invalid_argument("cochain_data: module must be graded");
  auto neg = g.negative_indices();
  int n = static_cast<int>(neg.size());

  CochainData<Rat> d;
  d.gdim = n;
  for (int idx : neg) d.gdeg.push_back(g.basis[idx].degree);

  // brackets of the negative part, in the negative basis
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[neg[i]] = i;
  d.gbrk.assign(n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, Rat(0))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : g.brk[neg[i]][neg[j]]) {
        auto it = pos.find(k);
        if (it == pos.end()) throw std::logic_error("cochain_data: negative part not bracket-closed");
        d.gbrk[i][j][it->second] = c;
      }

  // product -B(x, theta y) restricted to g_-
  Mat<Rat> B = killing_form(g);
  Mat<Rat> th = theta_involution(g);
  Mat<Rat> G = -(B * th);
  d.ggram = Mat<Rat>(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.ggram.at(i, j) = G.at(neg[i], neg[j]);

  d.udim = u.dim;
  d.udeg = u.degrees;
  for (int idx : neg) d.uact.push_back(u.act(idx));
  d.ugram = u.gram;
  return d;
}

}  // namespace exgeo
