#pragma once

#include <vector>

#include "legscale/expansions.hpp"
#include "legscale/rational.hpp"

namespace legscale {

// Expansions of P_n(lambda x) in unscaled Legendre terms:
//
//   P_n(lambda x) = sum_k a_{lambda,n,k} d^k P_{n-k} / dx^k
//                 = sum_k b_{lambda,n,k} P_{n-2k}
//
// with k = 0 .. floor(n/2). Any rational lambda is accepted, including 0
// (0^0 is taken as 1).

/// Upper limit of the inner sum that builds b from the a's and alpha_{n,k,i}.
enum class SumLimit {
  k_minus_one,  ///< max(k-1, 0), the shipped default
  k,            ///< also includes i = k, whose alpha_{n,k,k} is zero for k >= 1
};

/// lambda^(n-2k) (lambda^2 - 1)^k / (2^k k!). Requires 0 <= k <= floor(n/2).
[[nodiscard]] Rational a_coefficient(const Rational& lambda, int n, int k);

[[nodiscard]] ScalingExpansion expand_derivative_form(const Rational& lambda, int n);

/// alpha_{n,k,i}: the coefficient of P_{n-2k} in d^(k-i) P_{n-k+i} / dx^(k-i),
/// by its own recurrence. Requires 0 <= i <= k <= floor(n/2).
[[nodiscard]] Rational alpha_nki(int n, int k, int i);

/// alpha_{n, d+l, l} for l = 0 .. count-1; the chain the recurrence walks
/// along for fixed d = k - i.
[[nodiscard]] std::vector<Rational> alpha_nki_chain(int n, int d, int count);

[[nodiscard]] Rational b_coefficient(const Rational& lambda, int n, int k,
                                     SumLimit limit = SumLimit::k_minus_one);

[[nodiscard]] ScalingExpansion expand_legendre_form(const Rational& lambda, int n,
                                                    SumLimit limit = SumLimit::k_minus_one);

/// Legendre form built by pushing every a-term through the derivative
/// expansion and regrouping by degree; must equal expand_legendre_form.
[[nodiscard]] ScalingExpansion expand_legendre_form_composed(const Rational& lambda, int n);

}  // namespace legscale
