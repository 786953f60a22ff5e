#include "legscale/scale_expand.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "legscale/combinatorics.hpp"
#include "legscale/deriv_expand.hpp"

namespace legscale {

namespace {

void require_scaling_indices(int n, int k) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  if (k < 0 || 2 * k > n) {
    throw std::invalid_argument("scaling index k=" + std::to_string(k) + " outside 0..floor(n/2) for n=" +
                                std::to_string(n));
  }
}

const Rational kHalf(1, 2);

}  // namespace

Rational a_coefficient(const Rational& lambda, int n, int k) {
  require_scaling_indices(n, k);
  return lambda.pow(n - 2 * k) * (lambda * lambda - 1).pow(k) / (Rational(2).pow(k) * factorial(k));
}

ScalingExpansion expand_derivative_form(const Rational& lambda, int n) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  ScalingExpansion out{lambda, n, ExpansionForm::derivative, {}};
  for (int k = 0; 2 * k <= n; ++k) out.set(k, a_coefficient(lambda, n, k));
  return out;
}

std::vector<Rational> alpha_nki_chain(int n, int d, int count) {
  if (count <= 0) return {};
  require_scaling_indices(n, d + count - 1);
  if (d < 0) throw std::invalid_argument("alpha chain offset must be nonnegative");

  std::vector<Rational> chain;
  chain.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int k = d + i;
    const Rational upper = Rational(n - k + i) - kHalf;
    Rational value = Rational(2).pow(k + i) * falling_factorial(upper, k - i) *
                     falling_factorial(Rational(n - k), i) *
                     falling_factorial(Rational(n - 2 * k + 2 * i) - kHalf, 2 * i) /
                     (factorial(2 * i) * falling_factorial(upper, i));
    // alpha_{n, k-i+l, l} = chain[l]; the sum is empty for i = 0.
    for (int l = 0; l < i; ++l) {
      const int span = 2 * (i - l);
      value -= falling_factorial(Rational(2 * (n - 2 * k + i - l)), span) / factorial(span) *
               chain[static_cast<std::size_t>(l)];
    }
    chain.push_back(std::move(value));
  }
  return chain;
}

Rational alpha_nki(int n, int k, int i) {
  require_scaling_indices(n, k);
  if (i < 0 || i > k) throw std::invalid_argument("alpha sub-index must lie in 0..k");
  return std::move(alpha_nki_chain(n, k - i, i + 1).back());
}

Rational b_coefficient(const Rational& lambda, int n, int k, SumLimit limit) {
  require_scaling_indices(n, k);
  const int upper = limit == SumLimit::k ? k : std::max(k - 1, 0);
  const Rational lambda_sq_minus_one = lambda * lambda - 1;

  Rational total(0);
  for (int i = 0; i <= upper; ++i) {
    const int j = k - i;
    const Rational weight =
        lambda.pow(n - 2 * k + 2 * i) * lambda_sq_minus_one.pow(j) / (Rational(2).pow(j) * factorial(j));
    if (weight.is_zero()) continue;
    total += weight * alpha_nki(n, k, i);
  }
  return total;
}

ScalingExpansion expand_legendre_form(const Rational& lambda, int n, SumLimit limit) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  ScalingExpansion out{lambda, n, ExpansionForm::legendre, {}};
  for (int k = 0; 2 * k <= n; ++k) out.set(k, b_coefficient(lambda, n, k, limit));
  return out;
}

ScalingExpansion expand_legendre_form_composed(const Rational& lambda, int n) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  const auto derivative_form = expand_derivative_form(lambda, n);
  std::map<int, Rational> by_degree;
  for (const auto& [j, a] : derivative_form.coeffs) {
    const auto inner = deriv_expand_recurrence(n - j, j);
    for (std::size_t i = 0; i < inner.alphas.size(); ++i) {
      by_degree[inner.degree_of(static_cast<int>(i))] += a * inner.alphas[i];
    }
  }
  ScalingExpansion out{lambda, n, ExpansionForm::legendre, {}};
  for (const auto& [degree, c] : by_degree) out.set((n - degree) / 2, c);
  return out;
}

}  // namespace legscale
