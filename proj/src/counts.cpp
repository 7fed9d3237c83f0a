#include <wtensor/counts.hpp>

#include <numeric>
#include <stdexcept>

namespace wtensor {

QParam QParam::make(long q) {
  if (q < 2) throw std::invalid_argument("q must be an integer >= 2");
  QParam out;
  out.q = q;
  out.prime = true;
  if (q < 4) {
    return out;
  }
  for (long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      out.prime = false;
      break;
    }
  }
  return out;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

static void check_parts(long n, const std::vector<long>& parts) {
  if (n < 0) throw std::invalid_argument("multinomial: n must be nonnegative");
  long sum = 0;
  for (long p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: parts must be nonnegative");
    sum += p;
  }
  if (sum != n) throw std::invalid_argument("multinomial: parts must sum to n");
}

BigInt multinomial(long n, const std::vector<long>& parts) {
  check_parts(n, parts);
  BigInt r = factorial(static_cast<unsigned long>(n));
  for (long p : parts) {
    BigInt d = factorial(static_cast<unsigned long>(p));
    // Exact by construction of the multinomial coefficient.
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
  }
  return r;
}

BigInt phi(long n, const QParam& q) {
  if (n < 0) throw std::invalid_argument("phi: n must be nonnegative");
  BigInt r(1);
  BigInt qi(1);
  for (long i = 1; i <= n; ++i) {
    qi *= q.q;
    r *= qi - 1;
  }
  return r;
}

BigInt gauss_multinomial(long n, const std::vector<long>& parts, const QParam& q) {
  check_parts(n, parts);
  BigInt num = phi(n, q);
  BigInt den(1);
  for (long p : parts) den *= phi(p, q);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("gauss_multinomial: non-integral division (internal consistency)");
  BigInt r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

}  // namespace wtensor
