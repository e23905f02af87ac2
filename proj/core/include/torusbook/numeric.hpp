#pragma once

#include <gmpxx.h>
#include <string>

namespace torusbook {

// Exact arithmetic everywhere: words can blow exponents up during
// normalization and the grading arguments are divisibility arguments,
// so neither machine integers nor floating point are acceptable.
using Int = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Int& n) { return n.get_str(); }

inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rational make_rational(const Int& num, const Int& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_even(const Int& n) { return mpz_even_p(n.get_mpz_t()) != 0; }
inline bool is_odd(const Int& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

// Absolute value as a long, throwing if it does not fit. Used to bound
// expansion loops (e.g. turning a boundary-twist power into letters).
long checked_long(const Int& n, const char* context);

}  // namespace torusbook
