#pragma once

#include <algorithm>
#include <vector>

#include "exgeo/rational.hpp"

namespace exgeo {

// Dense univariate polynomial over Rat; coefficient i belongs to t^i.
struct UPoly {
  std::vector<Rat> c;

  UPoly() = default;
  explicit UPoly(Rat r) {
    if (!exgeo::is_zero(r)) c.push_back(std::move(r));
  }
  static UPoly var() {
    UPoly p;
    p.c = {Rat(0), Rat(1)};
    return p;
  }

  void trim() {
    while (!c.empty() && exgeo::is_zero(c.back())) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }  // deg(0) = -1
  const Rat& lead() const { return c.back(); }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.zero() || b.zero()) return {};
    UPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  bool operator==(const UPoly& o) const { return c == o.c; }

  // Division with remainder; divisor must be nonzero.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    q = UPoly();
    r = a;
    while (!r.zero() && r.deg() >= b.deg()) {
      int k = r.deg() - b.deg();
      Rat f = r.lead() / b.lead();
      if (q.c.size() < static_cast<size_t>(k) + 1) q.c.resize(k + 1, Rat(0));
      q.c[k] += f;
      for (int i = 0; i <= b.deg(); ++i) r.c[i + k] -= f * b.c[i];
      r.trim();
    }
    q.trim();
  }

  static UPoly gcd(UPoly a, UPoly b) {
    while (!b.zero()) {
      UPoly q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.zero()) {  // monic normalization
      Rat inv = Rat(1) / a.lead();
      for (auto& x : a.c) x *= inv;
    }
    return a;
  }

  Rat eval(const Rat& t) const {
    Rat r(0);
    for (size_t i = c.size(); i-- > 0;) r = r * t + c[i];
    return r;
  }

  std::string str(const std::string& name) const {
    if (zero()) return "0";
    std::string s;
    for (size_t i = c.size(); i-- > 0;) {
      if (exgeo::is_zero(c[i])) continue;
      if (!s.empty()) s += (sgn(c[i]) > 0 ? "+" : "");
      std::string coef = to_string(c[i]);
      if (i == 0) {
        s += coef;
      } else {
        if (coef == "1")
          ;
        else if (coef == "-1")
          s += "-";
        else
          s += coef + "*";
        s += name;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }
};

// Field of rational functions Q(t) in one formal symbol.
struct RatFunc {
  UPoly num, den;  // den monic, nonzero, gcd(num,den)=1

  RatFunc() : den(Rat(1)) {}
  RatFunc(int v) : num(Rat(v)), den(Rat(1)) {}
  RatFunc(const Rat& v) : num(v), den(Rat(1)) {}
  RatFunc(UPoly n, UPoly d) : num(std::move(n)), den(std::move(d)) { normalize(); }
  static RatFunc var() { return RatFunc(UPoly::var(), UPoly(Rat(1))); }

  void normalize() {
    if (den.zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num.zero()) {
      den = UPoly(Rat(1));
      return;
    }
    UPoly g = UPoly::gcd(num, den);
    if (g.deg() > 0) {
      UPoly q, r;
      UPoly::divmod(num, g, q, r);
      num = q;
      UPoly::divmod(den, g, q, r);
      den = q;
    }
    Rat inv = Rat(1) / den.lead();
    for (auto& x : den.c) x *= inv;
    for (auto& x : num.c) x *= inv;
  }

  bool zero() const { return num.zero(); }
  bool is_constant() const { return num.deg() <= 0 && den.deg() == 0; }
  Rat constant() const {
    if (!is_constant()) throw std::domain_error("RatFunc: not a constant");
    return num.zero() ? Rat(0) : num.c[0];
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.num, a.den * b.den);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num * b.den, a.den * b.num);
  }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num = -r.num;
    return r;
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  Rat eval(const Rat& t) const {
    Rat d = den.eval(t);
    if (exgeo::is_zero(d)) throw std::domain_error("RatFunc: pole at evaluation point");
    return num.eval(t) / d;
  }

  std::string str(const std::string& name = "a") const {
    if (den.deg() == 0) return num.str(name);
    return "(" + num.str(name) + ")/(" + den.str(name) + ")";
  }
};

inline bool is_zero(const RatFunc& f) { return f.zero(); }

}  // namespace exgeo
