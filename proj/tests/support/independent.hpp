#pragma once

// Test-only reference constructions. They deliberately avoid the library's
// combinatorics and Legendre code so they can serve as an outside opinion.

#include <cstdint>
#include <random>
#include <vector>

#include "legscale/poly.hpp"
#include "legscale/rational.hpp"

namespace legscale::testing {

inline Rational choose(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Rational c(1);
  for (int t = 1; t <= k; ++t) c = c * Rational(n - k + t) / Rational(t);
  return c;
}

/// P_n = 2^-n sum_k (-1)^k C(n,k) C(2n-2k, n) x^(n-2k)
inline Poly legendre_explicit(int n) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  Rational scale(1);
  for (int t = 0; t < n; ++t) scale = scale / Rational(2);
  for (int k = 0; 2 * k <= n; ++k) {
    Rational c = choose(n, k) * choose(2 * n - 2 * k, n) * scale;
    if (k % 2) c = -c;
    coeffs[static_cast<std::size_t>(n - 2 * k)] = c;
  }
  return Poly(std::move(coeffs));
}

/// Random p/q with |p| <= bound and 1 <= q <= bound.
inline Rational random_rational(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<long> p(-bound, bound);
  std::uniform_int_distribution<long> q(1, bound);
  const long num = p(rng);
  return Rational(num, q(rng));
}

}  // namespace legscale::testing
