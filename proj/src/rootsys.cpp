#include "exgeo/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace exgeo {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "G2" || s == "G") return Family::G2;
  throw std::invalid_argument("unknown family '" + s + "' (expected A, B, C, D or G2)");
}

namespace {

// Cartan matrix entries c(i,j) = <alpha_i, alpha_j-coroot>, Bourbaki/Humphreys
// numbering. B_l has the short root alpha_l, C_l the long root alpha_l, G2 the
// short root alpha_1.
Mat<Rat> make_cartan(Family f, int l) {
  Mat<Rat> c(l, l);
  for (int i = 0; i < l; ++i) c.at(i, i) = 2;
  auto chain = [&](int i, int j) { c.at(i, j) = -1; c.at(j, i) = -1; };
  switch (f) {
    case Family::A:
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      c.at(l - 2, l - 1) = -2;  // <alpha_{l-1}, alpha_l-coroot>
      break;
    case Family::C:
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      c.at(l - 1, l - 2) = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < l; ++i) chain(i, i + 1);
      chain(l - 3, l - 1);
      c.at(l - 2, l - 1) = 0;
      c.at(l - 1, l - 2) = 0;
      break;
    case Family::G2:
      c.at(0, 1) = -1;
      c.at(1, 0) = -3;
      break;
  }
  return c;
}

std::vector<Rat> make_d(Family f, int l) {
  std::vector<Rat> d(l, Rat(1));
  switch (f) {
    case Family::B:
      for (int i = 0; i + 1 < l; ++i) d[i] = 2;
      break;
    case Family::C:
      d[l - 1] = 2;
      break;
    case Family::G2:
      d[1] = 3;
      break;
    default:
      break;
  }
  return d;
}

struct VecLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const { return a < b; }
};

}  // namespace

Rat RootSystem::ip_alpha(const std::vector<Rat>& u, const std::vector<Rat>& v) const {
  Rat s(0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      if (is_zero(u[i]) || is_zero(v[j])) continue;
      s += u[i] * v[j] * cartan.at(i, j) * d[j];
    }
  return s;
}

std::vector<Rat> RootSystem::omega_to_alpha(const std::vector<Rat>& v) const {
  // omega_j = sum_k p_{jk} alpha_k, so alpha-coords u_k = sum_j v_j p_{jk}
  std::vector<Rat> u(rank, Rat(0));
  for (int k = 0; k < rank; ++k)
    for (int j = 0; j < rank; ++j) u[k] += v[j] * inverse_cartan.at(j, k);
  return u;
}

std::vector<Rat> RootSystem::alpha_to_omega(const std::vector<Rat>& u) const {
  // alpha_i = sum_j c_{ij} omega_j
  std::vector<Rat> v(rank, Rat(0));
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < rank; ++i) v[j] += u[i] * cartan.at(i, j);
  return v;
}

Weight RootSystem::in_omega(const Weight& w) const {
  if (w.basis == Weight::Basis::Omega) return w;
  return Weight::omega(alpha_to_omega(w.coords));
}

Weight RootSystem::in_alpha(const Weight& w) const {
  if (w.basis == Weight::Basis::Alpha) return w;
  return Weight::alpha(omega_to_alpha(w.coords));
}

Weight RootSystem::rho() const { return Weight::omega(std::vector<Rat>(rank, Rat(1))); }

Weight RootSystem::fundamental_weight(int i) const {
  std::vector<Rat> c(rank, Rat(0));
  c[i - 1] = 1;
  return Weight::omega(std::move(c));
}

Weight RootSystem::simple_root(int i) const {
  std::vector<Rat> c(rank, Rat(0));
  c[i - 1] = 1;
  return Weight::alpha(std::move(c));
}

Rat RootSystem::pairing_coroot(const Weight& w, int i) const {
  if (w.basis == Weight::Basis::Omega) return w.coords[i - 1];
  Rat s(0);
  for (int j = 0; j < rank; ++j) s += w.coords[j] * cartan.at(j, i - 1);
  return s;
}

bool RootSystem::is_positive_root(const std::vector<int>& a) const {
  return std::find(positive_roots.begin(), positive_roots.end(), a) != positive_roots.end();
}

int RootSystem::root_height(const std::vector<int>& a) const {
  int h = 0;
  for (int x : a) h += x;
  return h;
}

Rat RootSystem::half_norm(const std::vector<int>& a) const {
  std::vector<Rat> u(a.begin(), a.end());
  return ip_alpha(u, u) / 2;
}

RootSystem build_root_system(Family family, int rank) {
  if (family == Family::D && rank == 3) family = Family::A;  // D3 = A3
  auto bad = [&](const std::string& range) {
    throw std::invalid_argument("family " + family_name(family) + " requires rank " + range + ", got " +
                                std::to_string(rank));
  };
  switch (family) {
    case Family::A:
      if (rank < 1) bad(">= 1");
      break;
    case Family::B:
      if (rank < 2) bad(">= 2");
      break;
    case Family::C:
      if (rank < 2) bad(">= 2");
      break;
    case Family::D:
      if (rank < 4) bad(">= 4 (D3 is accepted as an alias of A3)");
      break;
    case Family::G2:
      if (rank != 2) bad("= 2");
      break;
  }

  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.cartan = make_cartan(family, rank);
  rs.d = make_d(family, rank);
  auto inv = inverse(rs.cartan);
  if (!inv) throw std::logic_error("Cartan matrix not invertible");
  rs.inverse_cartan = *inv;

  // Positive roots by closure: process by height; the down-string of beta in
  // the direction alpha_i involves lower heights only, so q = p - <beta,a_i*>
  // is available when beta is processed.
  std::set<std::vector<int>, VecLess> known;
  std::vector<std::vector<int>> by_height;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    known.insert(e);
    by_height.push_back(e);
  }
  size_t head = 0;
  std::vector<std::vector<int>> frontier = by_height;
  while (head < by_height.size()) {
    std::vector<int> beta = by_height[head++];
    for (int i = 0; i < rank; ++i) {
      // p = how far beta - k alpha_i stays a root (positive or negative)
      int p = 0;
      std::vector<int> down = beta;
      while (true) {
        down[i] -= 1;
        bool zero = std::all_of(down.begin(), down.end(), [](int x) { return x == 0; });
        if (zero) break;
        std::vector<int> neg(down);
        bool negok = true;
        for (int& x : neg) x = -x;
        if (known.count(down) || known.count(neg)) {
          (void)negok;
          ++p;
        } else {
          break;
        }
      }
      Rat pairing(0);
      for (int j = 0; j < rank; ++j) pairing += Rat(beta[j]) * rs.cartan.at(j, i);
      Rat q = Rat(p) - pairing;
      if (q > 0) {
        std::vector<int> up = beta;
        up[i] += 1;
        if (!known.count(up)) {
          known.insert(up);
          by_height.push_back(up);
        }
      }
    }
  }
  std::sort(by_height.begin(), by_height.end(), [&](const std::vector<int>& a, const std::vector<int>& b) {
    int ha = rs.root_height(a), hb = rs.root_height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  rs.positive_roots = by_height;

  // invariants pinned at construction time
  long expect = 0;
  switch (family) {
    case Family::A: expect = static_cast<long>(rank) * (rank + 1) / 2; break;
    case Family::B:
    case Family::C: expect = static_cast<long>(rank) * rank; break;
    case Family::D: expect = static_cast<long>(rank) * (rank - 1); break;
    case Family::G2: expect = 6; break;
  }
  if (static_cast<long>(rs.positive_roots.size()) != expect)
    throw std::logic_error("positive root count mismatch for " + family_name(family) + std::to_string(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (!(rs.inverse_cartan.at(i, j) > 0))
        throw std::logic_error("inverse Cartan matrix has a non-positive entry");
  return rs;
}

Mat<Rat> inverse_cartan(const RootSystem& rs) { return rs.inverse_cartan; }

Weight reflect(const RootSystem& rs, const Weight& w, int i) {
  if (i < 1 || i > rs.rank) throw std::out_of_range("reflect: simple root index out of range");
  Rat k = rs.pairing_coroot(w, i);
  if (w.basis == Weight::Basis::Alpha) {
    Weight r = w;
    r.coords[i - 1] -= k;
    return r;
  }
  // omega coords: sigma_i(w) = w - k * alpha_i, alpha_i = row i of Cartan
  Weight r = w;
  for (int j = 0; j < rs.rank; ++j) r.coords[j] -= k * rs.cartan.at(i - 1, j);
  return r;
}

}  // namespace exgeo
