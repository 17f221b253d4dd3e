#pragma once

#include <string>

#include "exgeo/rational.hpp"

namespace exgeo {

// Quadratic extension T[sqrt(2)]: values a + b*sqrt(2).
template <class T>
struct Quad {
  T a{0}, b{0};

  Quad() = default;
  Quad(int v) : a(v), b(0) {}
  Quad(T ra) : a(std::move(ra)), b(0) {}
  Quad(T ra, T rb) : a(std::move(ra)), b(std::move(rb)) {}
  static Quad sqrt2() { return Quad(T(0), T(1)); }
  static Quad inv_sqrt2() { return Quad(T(0), T(1) / T(2)); }  // 1/sqrt2 = sqrt2/2

  bool zero() const { return is_zero(a) && is_zero(b); }

  friend Quad operator+(const Quad& x, const Quad& y) { return Quad(x.a + y.a, x.b + y.b); }
  friend Quad operator-(const Quad& x, const Quad& y) { return Quad(x.a - y.a, x.b - y.b); }
  friend Quad operator*(const Quad& x, const Quad& y) {
    return Quad(x.a * y.a + T(2) * x.b * y.b, x.a * y.b + x.b * y.a);
  }
  friend Quad operator/(const Quad& x, const Quad& y) {
    // (a+b s)/(c+d s) = (a+b s)(c-d s)/(c^2-2 d^2)
    T n = y.a * y.a - T(2) * y.b * y.b;
    if (is_zero(n)) throw std::domain_error("Quad: division by zero");
    Quad conj(y.a, T(0) - y.b);
    Quad num = x * conj;
    return Quad(num.a / n, num.b / n);
  }
  Quad operator-() const { return Quad(T(0) - a, T(0) - b); }
  Quad& operator+=(const Quad& o) { return *this = *this + o; }
  Quad& operator-=(const Quad& o) { return *this = *this - o; }
  Quad& operator*=(const Quad& o) { return *this = *this * o; }
  Quad& operator/=(const Quad& o) { return *this = *this / o; }
  bool operator==(const Quad& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Quad& o) const { return !(*this == o); }
};

template <class T>
inline bool is_zero(const Quad<T>& q) {
  return q.zero();
}

// Sign of a + b*sqrt(2) over an ordered field.
inline int sign(const Quad<Rat>& q) {
  int sa = sgn(q.a), sb = sgn(q.b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 vs 2 b^2
  Rat d = q.a * q.a - 2 * q.b * q.b;
  int sd = sgn(d);
  return sd == 0 ? 0 : (sd > 0 ? sa : sb);
}

inline std::string to_string(const Quad<Rat>& q) {
  if (q.zero()) return "0";
  std::string s;
  if (!exgeo::is_zero(q.a)) s += to_string(q.a);
  if (!exgeo::is_zero(q.b)) {
    if (!s.empty() && sgn(q.b) > 0) s += "+";
    s += to_string(q.b) + "*r2";
  }
  return s;
}

}  // namespace exgeo
