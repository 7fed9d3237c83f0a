#pragma once

#include <wtensor/poly.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace wtensor {

// Deterministic RNG for randomized suites: the seed fully determines every
// draw, and draws are made in a fixed sequential order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n ? gen_() % n : 0; }

  // Uniform in [lo, hi] inclusive.
  long int_in(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Random polynomial of degree <= max_deg with coefficients in [-cmax, cmax].
  RingPoly poly(int max_deg, long cmax) {
    std::vector<BigInt> cs;
    int deg = static_cast<int>(below(static_cast<std::uint64_t>(max_deg) + 1));
    for (int i = 0; i <= deg; ++i) cs.emplace_back(int_in(-cmax, cmax));
    return RingPoly::from_coeffs(std::move(cs));
  }

  std::vector<long> int_vec(size_t n, long lo, long hi) {
    std::vector<long> v(n);
    for (auto& x : v) x = int_in(lo, hi);
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace wtensor
