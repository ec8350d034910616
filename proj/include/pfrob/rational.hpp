#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "pfrob/errors.hpp"

namespace pfrob {

/* Exact arithmetic backbone.  Int is an arbitrary-precision integer, Rat a
 * rational kept canonical (reduced, positive denominator) by every gmpxx
 * operation.  Helpers below cover the handful of GMP calls that have no
 * gmpxx operator form.
 */

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Int int_pow(unsigned long base, unsigned long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

inline Rat rat_pow(const Rat& base, unsigned long exp) {
  Rat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
  return r;  // base canonical => base^e canonical
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw division_by_zero("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// For quantities that a closed form guarantees to be integral.
inline Int to_integer_exact(const Rat& q, const char* what) {
  if (!is_integer(q))
    throw consistency_error(std::string(what) + ": expected integer, got " +
                            q.get_str());
  return q.get_num();
}

inline std::string to_decimal(const Int& n) { return n.get_str(); }

// "n" or "n/d", GMP canonical form.
inline std::string to_fraction(const Rat& q) { return q.get_str(); }

inline Int parse_integer(const std::string& s) {
  try {
    return Int(s, 10);
  } catch (const std::invalid_argument&) {
    throw parse_error("not an integer: '" + s + "'");
  }
}

// Accepts "n" and "n/d".
inline Rat parse_rational(const std::string& s) {
  try {
    Rat q(s, 10);
    if (q.get_den() == 0) throw parse_error("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw parse_error("not a rational: '" + s + "'");
  }
}

inline std::uint64_t to_u64(const Int& n, const char* what) {
  if (n < 0 || !n.fits_ulong_p())
    throw domain_error(std::string(what) + " out of range: " + n.get_str());
  return n.get_ui();
}

}  // namespace pfrob
