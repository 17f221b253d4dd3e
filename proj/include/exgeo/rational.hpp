#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace exgeo {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline bool is_one(const Rat& q) { return q == 1; }

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p", "p/q", optional leading sign.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
  q.canonicalize();
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
  return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_pow(const Rat& q, long e) {
  if (e < 0) {
    if (is_zero(q)) throw std::domain_error("rat_pow: 0^negative");
    return rat_pow(Rat(1) / q, -e);
  }
  Rat r(1), b = q;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// Rounds a nonnegative rational up to the nearest integer.
inline long ceil_long(const Rat& q) {
  Int n = q.get_num(), d = q.get_den();
  Int c = (n + d - 1) / d;
  return c.get_si();
}

}  // namespace exgeo
