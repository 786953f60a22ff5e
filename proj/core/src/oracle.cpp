#include "legscale/oracle.hpp"

#include <stdexcept>
#include <utility>

#include "legscale/combinatorics.hpp"
#include "legscale/legendre.hpp"

namespace legscale::oracle {

Poly scaled_legendre(int n, const Rational& lambda) { return scale_argument(legendre_bonnet(n), lambda); }

Poly reconstruct(const ScalingExpansion& expansion) {
  const auto table = legendre_table(expansion.n);
  Poly total;
  for (const auto& [k, c] : expansion.coeffs) {
    if (expansion.form == ExpansionForm::derivative) {
      total += differentiate(table[static_cast<std::size_t>(expansion.n - k)], k) * c;
    } else {
      total += table[static_cast<std::size_t>(expansion.n - 2 * k)] * c;
    }
  }
  return total;
}

Poly reconstruct(const DerivExpansion& expansion) { return to_poly(expansion.to_series()); }

Rational projected_coefficient(const Poly& p, int m) {
  return inner_product(p, legendre_bonnet(m)) * Rational(2 * m + 1, 2);
}

Poly replay_rodrigues_derivation(const Rational& lambda, int n) {
  if (lambda.is_zero()) throw std::invalid_argument("lambda=0 invalid for replay");
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");

  const Rational lambda_sq = lambda * lambda;
  const Rational root = (lambda_sq - 1) / lambda_sq;
  const Poly shifted{Rational(-1), Rational(0), Rational(1)};  // x^2 - 1

  // ((x^2-1) + root)^n = sum_k C(n,k) root^(n-k) (x^2-1)^k; only terms with
  // 2k >= n survive the n-th derivative.
  Poly derived;
  Poly shifted_power = Poly::constant(Rational(1));
  for (int k = 0; k <= n; ++k) {
    derived += differentiate(shifted_power, n) * (binomial(n, k) * root.pow(n - k));
    shifted_power *= shifted;
  }
  derived *= lambda.pow(n) / (Rational(2).pow(n) * factorial(n));
  return derived;
}

Counterexample make_counterexample(std::string parameters, const Poly& lhs, const Poly& rhs) {
  return Counterexample{std::move(parameters), {lhs.coeffs().begin(), lhs.coeffs().end()},
                        {rhs.coeffs().begin(), rhs.coeffs().end()}};
}

Counterexample make_counterexample(std::string parameters, std::vector<Rational> lhs,
                                   std::vector<Rational> rhs) {
  return Counterexample{std::move(parameters), std::move(lhs), std::move(rhs)};
}

}  // namespace legscale::oracle
