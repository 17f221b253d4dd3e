#pragma once

#include <map>

#include "exgeo/subspace.hpp"

namespace exgeo::wpde {

// Descending filtration of R^n: phi^p for p in [pmin, pmax], phi^{pmin} = R^n
// (saturated), phi^{pmax+1} = 0 (fine), phi^p given by spanning rows.
struct Filtration {
  int n = 0;
  int pmin = 0, pmax = 0;
  std::map<int, Mat<Rat>> steps;  // p -> rows spanning phi^p

  Mat<Rat> step(int p) const {
    auto it = steps.find(p);
    if (it != steps.end()) return it->second;
    if (p <= pmin) return Mat<Rat>::identity(n);
    if (p > pmax) return Mat<Rat>(0, n);
    throw std::invalid_argument("filtration: missing step " + std::to_string(p));
  }
  int dim_step(int p) const { return step(p).rows; }
  std::vector<int> type() const {  // dims of the nonzero steps, descending
    std::vector<int> t;
    for (int p = pmin; p <= pmax; ++p) t.push_back(dim_step(p));
    return t;
  }

  void validate() const {
    if (dim_step(pmin) != n) throw std::invalid_argument("filtration: not saturated (bottom step must be everything)");
    if (pmax < pmin) throw std::invalid_argument("filtration: empty index range");
    for (int p = pmin; p < pmax; ++p) {
      Echelon<Rat> big(n);
      Mat<Rat> a = step(p);
      for (int r = 0; r < a.rows; ++r) {
        std::vector<Rat> v(n);
        for (int c = 0; c < n; ++c) v[c] = a.at(r, c);
        big.add(std::move(v));
      }
      Mat<Rat> b = step(p + 1);
      if (b.rows > big.dim()) throw std::invalid_argument("filtration: not descending");
      for (int r = 0; r < b.rows; ++r) {
        std::vector<Rat> v(n);
        for (int c = 0; c < n; ++c) v[c] = b.at(r, c);
        if (!big.contains(v)) throw std::invalid_argument("filtration: not descending");
      }
    }
    if (dim_step(pmax) == 0) throw std::invalid_argument("filtration: top nonzero step must be nonzero");
    // fine: phi^{pmax+1} = 0 by construction
  }
};

// Dual filtration on the dual space: phi*^p = annihilator of phi^{-p+1}.
inline Filtration dualize_filtration(const Filtration& phi) {
  phi.validate();
  Filtration out;
  out.n = phi.n;
  // phi*^p = (phi^{-p+1})^perp, so phi*^p is everything for p <= -pmax and
  // zero for p > -pmin
  out.pmin = -phi.pmax;
  out.pmax = -phi.pmin;
  for (int p = out.pmin + 1; p <= out.pmax; ++p) out.steps[p] = kernel_ff(phi.step(-p + 1));
  out.validate();
  return out;
}

// Induced pairing between gr_p(phi) and gr_q(phi*): the block of the standard
// pairing; nonzero only when p + q = 0 (checked by tests).
inline Mat<Rat> gr_pairing(const Filtration& phi, const Filtration& dual, int p, int q) {
  // representatives: rows of step(p) reduced mod step(p+1), similarly for dual
  auto reps = [](const Filtration& f, int p_) {
    Echelon<Rat> next(f.n);
    Mat<Rat> b = f.step(p_ + 1);
    for (int r = 0; r < b.rows; ++r) {
      std::vector<Rat> v(f.n);
      for (int c = 0; c < f.n; ++c) v[c] = b.at(r, c);
      next.add(std::move(v));
    }
    std::vector<std::vector<Rat>> out;
    Echelon<Rat> seen = next;
    Mat<Rat> a = f.step(p_);
    for (int r = 0; r < a.rows; ++r) {
      std::vector<Rat> v(f.n);
      for (int c = 0; c < f.n; ++c) v[c] = a.at(r, c);
      if (seen.add(v)) out.push_back(v);
    }
    return out;
  };
  auto rp = reps(phi, p), rq = reps(dual, q);
  Mat<Rat> m(static_cast<int>(rp.size()), static_cast<int>(rq.size()));
  for (size_t i = 0; i < rp.size(); ++i)
    for (size_t j = 0; j < rq.size(); ++j) {
      Rat s(0);
      for (int c = 0; c < phi.n; ++c) s += rp[i][c] * rq[j][c];
      m.at(static_cast<int>(i), static_cast<int>(j)) = s;
    }
  return m;
}

}  // namespace exgeo::wpde
