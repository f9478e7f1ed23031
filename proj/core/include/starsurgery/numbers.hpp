#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace starsurgery {

// All arithmetic in this library is exact: arbitrary-precision integers and
// canonical rationals. No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline const Int rat_num(const Rat& q) { return Int(q.get_num()); }
inline const Int rat_den(const Rat& q) { return Int(q.get_den()); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Canonical text form: integers as-is, proper fractions as "p/q".
inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& n) { return n.get_str(); }

inline int sign(const Int& n) { return sgn(n); }
inline int sign(const Rat& q) { return sgn(q); }

/// Largest integer k with k <= q.
inline Int rat_floor(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

inline Int rat_ceil(const Rat& q) {
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c;
}

/// Reduces q modulo 2Z into the half-open interval (-1, 1].
inline Rat reduce_mod2_halfopen(const Rat& q) {
  Rat shifted = (q - 1) / 2;
  Int k = rat_ceil(shifted);
  return q - 2 * Rat(k);
}

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

}  // namespace starsurgery
