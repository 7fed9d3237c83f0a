#pragma once

#include <wtensor/bigint.hpp>

#include <vector>

namespace wtensor {

// Integer parameter q >= 2 of the section-11/12 analogues. Primality gates
// geometric enumeration only; the algebraic product accepts any q >= 2.
struct QParam {
  long q = 2;
  bool prime = false;

  // Validates q >= 2 and computes the primality flag. Throws
  // std::invalid_argument on q < 2.
  static QParam make(long q);
};

BigInt binomial(long n, long k);

// n! / prod(parts[i]!). Throws std::invalid_argument unless all parts are
// nonnegative and sum to n. Symmetric in the parts.
BigInt multinomial(long n, const std::vector<long>& parts);

// phi_n(q) = (q^n - 1)(q^{n-1} - 1) ... (q - 1); phi_0 = 1.
BigInt phi(long n, const QParam& q);

// Gaussian multinomial phi_n / prod(phi_parts). Same preconditions as
// multinomial. The division is checked exact; a remainder would be an
// internal consistency bug and throws std::logic_error.
BigInt gauss_multinomial(long n, const std::vector<long>& parts, const QParam& q);

}  // namespace wtensor
