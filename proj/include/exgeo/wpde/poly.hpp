#pragma once

#include <map>
#include <string>
#include <vector>

#include "exgeo/rational.hpp"

namespace exgeo::wpde {

using exgeo::is_zero;  // keep the scalar overloads visible next to the Poly one

// Exponent vector; arity fixed by the surrounding variable table.
using Mono = std::vector<int>;

// Sparse multivariate polynomial over a field K.
template <class K>
struct Poly {
  std::map<Mono, K> t;

  Poly() = default;
  // Mat<Poly> needs T(0); nonzero constants need an arity (use constant()).
  explicit Poly(int v) {
    if (v != 0) throw std::logic_error("Poly(int): nonzero constant requires an arity");
  }
  static Poly constant(int nvars, K c) {
    Poly p;
    if (!is_zero(c)) p.t[Mono(nvars, 0)] = std::move(c);
    return p;
  }
  static Poly variable(int nvars, int i) {
    Poly p;
    Mono m(nvars, 0);
    m[i] = 1;
    p.t[std::move(m)] = K(1);
    return p;
  }

  bool zero() const { return t.empty(); }
  int nvars() const { return t.empty() ? -1 : static_cast<int>(t.begin()->first.size()); }

  void cleanup() {
    for (auto it = t.begin(); it != t.end();) it = is_zero(it->second) ? t.erase(it) : std::next(it);
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.t) {
      auto it = r.t.find(m);
      if (it == r.t.end())
        r.t[m] = c;
      else {
        it->second += c;
        if (is_zero(it->second)) r.t.erase(it);
      }
    }
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.t) {
      auto it = r.t.find(m);
      if (it == r.t.end())
        r.t[m] = K(0) - c;
      else {
        it->second -= c;
        if (is_zero(it->second)) r.t.erase(it);
      }
    }
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [m1, c1] : a.t)
      for (const auto& [m2, c2] : b.t) {
        Mono m(m1.size());
        for (size_t i = 0; i < m1.size(); ++i) m[i] = m1[i] + m2[i];
        auto it = r.t.find(m);
        if (it == r.t.end())
          r.t[std::move(m)] = c1 * c2;
        else
          it->second += c1 * c2;
      }
    r.cleanup();
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.t) c = K(0) - c;
    return r;
  }
  friend Poly operator*(const K& s, const Poly& p) {
    if (is_zero(s)) return Poly();
    Poly r = p;
    for (auto& [m, c] : r.t) c *= s;
    return r;
  }
  bool operator==(const Poly& o) const { return t == o.t; }

  Poly derivative(int var) const {
    Poly r;
    for (const auto& [m, c] : t) {
      if (m[var] == 0) continue;
      Mono d = m;
      d[var] -= 1;
      r.t[std::move(d)] = c * K(m[var]);
    }
    return r;
  }

  static int wdeg_mono(const Mono& m, const std::vector<int>& weights) {
    int s = 0;
    for (size_t i = 0; i < m.size(); ++i) s += m[i] * weights[i];
    return s;
  }
  // max weighted degree; -1 for the zero polynomial
  int wdeg(const std::vector<int>& weights) const {
    int s = -1;
    for (const auto& [m, c] : t) s = std::max(s, wdeg_mono(m, weights));
    return s;
  }
  bool homogeneous(const std::vector<int>& weights, int* out = nullptr) const {
    int d = -2;
    for (const auto& [m, c] : t) {
      int w = wdeg_mono(m, weights);
      if (d == -2)
        d = w;
      else if (d != w)
        return false;
    }
    if (out) *out = d;
    return true;
  }

  K coeff(const Mono& m) const {
    auto it = t.find(m);
    return it == t.end() ? K(0) : it->second;
  }
};

template <class K>
inline bool is_zero(const Poly<K>& p) {
  return p.zero();
}

// Deterministic rendering; coef_str stringifies a scalar.
template <class K, class F>
std::string poly_str(const Poly<K>& p, const std::vector<std::string>& names, F coef_str) {
  if (p.zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.t) {
    std::string cs = coef_str(c);
    std::string vars;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += names[i];
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    std::string term;
    if (vars.empty())
      term = cs;
    else if (cs == "1")
      term = vars;
    else if (cs == "-1")
      term = "-" + vars;
    else if (cs.find_first_of("+-", 1) != std::string::npos || cs.find('/') != std::string::npos)
      term = "(" + cs + ")*" + vars;
    else
      term = cs + "*" + vars;
    if (!s.empty() && term[0] != '-') s += "+";
    s += term;
  }
  return s;
}

}  // namespace exgeo::wpde
