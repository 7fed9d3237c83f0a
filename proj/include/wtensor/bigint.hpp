#pragma once

#include <gmpxx.h>

#include <string>

namespace wtensor {

// Exact arbitrary-precision integer. GMP keeps values canonical (no negative
// zero) and all arithmetic exact, which is the contract everything here
// depends on.
using BigInt = mpz_class;

inline BigInt int_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline bool fits_long(const BigInt& v) { return v.fits_slong_p(); }

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace wtensor
