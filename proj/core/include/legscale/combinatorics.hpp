#pragma once

#include "legscale/rational.hpp"

namespace legscale {

/// x (x-1) ... (x-n+1); the empty product 1 when n = 0.
[[nodiscard]] Rational falling_factorial(const Rational& x, int n);

/// Pochhammer symbol (a)_j = a (a+1) ... (a+j-1); 1 when j = 0.
[[nodiscard]] Rational rising_factorial(const Rational& a, int j);

[[nodiscard]] Rational factorial(int n);

/// n choose k, and 0 when k > n.
[[nodiscard]] Rational binomial(int n, int k);

}  // namespace legscale
