#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <wtensor/bigint.hpp>
#include <wtensor/counts.hpp>
#include <wtensor/poly.hpp>
#include <wtensor/rng.hpp>

#include <stdexcept>
#include <vector>

using namespace wtensor;

TEST_CASE("BigInt basics and factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  // 21! overflows 64 bits; exactness is the whole point.
  CHECK(factorial(21) == BigInt("51090942171709440000"));
  CHECK(fits_long(BigInt(42)));
  CHECK_FALSE(fits_long(factorial(30)));
  CHECK(to_string(factorial(10)) == "3628800");
}

TEST_CASE("binomial and multinomial oracles") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(multinomial(0, {}) == 1);
  CHECK(multinomial(4, {1, 1, 2}) == 12);
  CHECK(multinomial(6, {2, 2, 2}) == 90);
  CHECK(multinomial(3, {3}) == 1);
  // Parts must be nonnegative and sum to n.
  CHECK_THROWS_AS(multinomial(4, {1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(multinomial(4, {5, -1}), std::invalid_argument);
}

TEST_CASE("trinomial rows sum to 3^n") {
  for (long n = 0; n <= 9; ++n) {
    BigInt total = 0;
    for (long r = 0; r <= n; ++r)
      for (long s = 0; r + s <= n; ++s) total += multinomial(n, {r, s, n - r - s});
    BigInt pow3 = 1;
    for (long i = 0; i < n; ++i) pow3 *= 3;
    CHECK(total == pow3);
  }
}

TEST_CASE("QParam validation") {
  CHECK(QParam::make(2).prime);
  CHECK(QParam::make(3).prime);
  CHECK(QParam::make(5).prime);
  CHECK_FALSE(QParam::make(4).prime);
  CHECK_FALSE(QParam::make(6).prime);
  CHECK(QParam::make(7).prime);
  CHECK_THROWS_AS(QParam::make(1), std::invalid_argument);
  CHECK_THROWS_AS(QParam::make(0), std::invalid_argument);
  CHECK_THROWS_AS(QParam::make(-3), std::invalid_argument);
}

TEST_CASE("phi ladder") {
  const QParam q2 = QParam::make(2);
  CHECK(phi(0, q2) == 1);
  CHECK(phi(1, q2) == 1);
  CHECK(phi(2, q2) == 3);
  CHECK(phi(3, q2) == 21);  // (8-1)(4-1)(2-1)
  const QParam q3 = QParam::make(3);
  CHECK(phi(2, q3) == 16);  // (9-1)(3-1)
}

TEST_CASE("Gaussian binomial oracles") {
  const QParam q2 = QParam::make(2);
  // Subspace counts of F_2^3: 1, 7, 7, 1.
  CHECK(gauss_multinomial(3, {0, 3}, q2) == 1);
  CHECK(gauss_multinomial(3, {1, 2}, q2) == 7);
  CHECK(gauss_multinomial(3, {2, 1}, q2) == 7);
  const QParam q3 = QParam::make(3);
  CHECK(gauss_multinomial(2, {1, 1}, q3) == 4);
  // q = 1 degenerates to the ordinary multinomial; q = 4 (non-prime) is
  // still fine for the algebraic count.
  const QParam q4 = QParam::make(4);
  CHECK(gauss_multinomial(2, {1, 1}, q4) == 5);
}

TEST_CASE("Gaussian binomial Pascal recurrence") {
  // [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q for 0 < k < n.
  for (long qv : {2L, 3L, 5L}) {
    const QParam q = QParam::make(qv);
    for (long n = 2; n <= 8; ++n)
      for (long k = 1; k < n; ++k) {
        BigInt qk = 1;
        for (long i = 0; i < k; ++i) qk *= qv;
        CHECK(gauss_multinomial(n, {k, n - k}, q) ==
              gauss_multinomial(n - 1, {k - 1, n - k}, q) +
                  qk * gauss_multinomial(n - 1, {k, n - 1 - k}, q));
      }
  }
}

TEST_CASE("Gaussian trinomial factors through nested binomials") {
  for (long qv : {2L, 3L}) {
    const QParam q = QParam::make(qv);
    for (long n = 0; n <= 6; ++n)
      for (long a = 0; a <= n; ++a)
        for (long b = 0; a + b <= n; ++b)
          CHECK(gauss_multinomial(n, {a, b, n - a - b}, q) ==
                gauss_multinomial(n, {a, n - a}, q) *
                    gauss_multinomial(n - a, {b, n - a - b}, q));
  }
}

TEST_CASE("RingPoly construction and text") {
  CHECK(RingPoly().is_zero());
  CHECK(RingPoly(0).is_zero());
  CHECK(RingPoly().str() == "0");
  CHECK(RingPoly(7).str() == "7");
  CHECK(RingPoly::lambda().str() == "lam");
  CHECK(RingPoly::monomial(BigInt(1), 2).str() == "lam^2");
  const RingPoly p = RingPoly(2) + RingPoly(8) * RingPoly::lambda() +
                     RingPoly::monomial(BigInt(4), 2);
  CHECK(p.str() == "2 + 8*lam + 4*lam^2");
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == 2);
  CHECK(p.coeff(1) == 8);
  CHECK(p.coeff(2) == 4);
  CHECK(p.coeff(5) == 0);
  CHECK_FALSE(p.is_constant());
  CHECK(RingPoly(-3).str() == "-3");
}

TEST_CASE("RingPoly parse/str roundtrip") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const RingPoly p = rng.poly(4, 9);
    CHECK(RingPoly::parse(p.str()) == p);
  }
  CHECK(RingPoly::parse("lam^3") == RingPoly::monomial(BigInt(1), 3));
  CHECK(RingPoly::parse(" 1 - lam ") == RingPoly(1) - RingPoly::lambda());
  CHECK(RingPoly::parse("0") == RingPoly());
  CHECK_THROWS_AS(RingPoly::parse("lam^"), std::invalid_argument);
  CHECK_THROWS_AS(RingPoly::parse("x + 1"), std::invalid_argument);
}

TEST_CASE("RingPoly ring axioms on random samples") {
  Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    const RingPoly a = rng.poly(3, 6), b = rng.poly(3, 6), c = rng.poly(3, 6);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + RingPoly() == a);
    CHECK(a * RingPoly(1) == a);
    CHECK(a - a == RingPoly());
    CHECK(a + (-a) == RingPoly());
  }
}

TEST_CASE("RingPoly pow, eval, subst") {
  const RingPoly lam = RingPoly::lambda();
  const RingPoly p = RingPoly(1) + lam;
  CHECK(p.pow(0) == RingPoly(1));
  CHECK(p.pow(2) == RingPoly(1) + RingPoly(2) * lam + RingPoly::monomial(BigInt(1), 2));
  CHECK(p.eval(BigInt(4)) == 5);
  CHECK((lam * lam).eval(BigInt(-3)) == 9);
  // Specializing the formal weight must commute with arithmetic.
  Rng rng(13);
  for (int i = 0; i < 40; ++i) {
    const RingPoly a = rng.poly(3, 5), b = rng.poly(3, 5);
    for (long v : {0L, 1L, 2L, -1L}) {
      CHECK((a * b).eval(BigInt(v)) == a.eval(BigInt(v)) * b.eval(BigInt(v)));
      CHECK((a + b).subst(RingPoly(v)) == a.subst(RingPoly(v)) + b.subst(RingPoly(v)));
    }
    CHECK(a.subst(RingPoly::lambda()) == a);
  }
}

TEST_CASE("lam_pow and poly_eval surface ops") {
  CHECK(lam_pow(0) == RingPoly(1));
  CHECK(lam_pow(3) == RingPoly::lambda().pow(3));
  CHECK(poly_eval(RingPoly(2) + lam_pow(2), BigInt(5)) == 27);
}
