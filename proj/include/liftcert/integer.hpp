#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace liftcert {

// Every lattice and homology computation runs on GMP integers. Word
// products, matrix powers and SNF intermediates routinely leave 64 bits.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer abs_value(const Integer& x) { return Integer(abs(x)); }

inline Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm_of(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Floor-style remainder in [0, |m|).
inline Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool fits_int64(const Integer& x) { return x.fits_slong_p() != 0; }

inline std::int64_t to_int64(const Integer& x) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return x.get_si();
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

}  // namespace liftcert
