#pragma once

// Brute-force checking side. Everything here is built from polynomial
// primitives only (construction, differentiation, scaling, integration); it
// never calls the coefficient formulas it is used to check.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "legscale/expansions.hpp"
#include "legscale/poly.hpp"
#include "legscale/rational.hpp"

namespace legscale::oracle {

/// First failing case of a sweep, with both sides dumped in full.
struct Counterexample {
  std::string parameters;
  std::vector<Rational> lhs;
  std::vector<Rational> rhs;
};

struct VerificationReport {
  std::string subject;
  int n_max = 0;
  std::string k_range;
  std::vector<Rational> lambdas;
  std::size_t cases = 0;
  std::optional<Counterexample> counterexample;
  std::vector<std::string> notes;

  [[nodiscard]] bool passed() const { return !counterexample.has_value(); }
};

/// P_n(lambda x) by direct substitution.
[[nodiscard]] Poly scaled_legendre(int n, const Rational& lambda);

/// sum_k c_k d^k P_{n-k} / dx^k or sum_k c_k P_{n-2k}, depending on the form.
[[nodiscard]] Poly reconstruct(const ScalingExpansion& expansion);

/// sum_i alpha_i P_{n-k-2i}.
[[nodiscard]] Poly reconstruct(const DerivExpansion& expansion);

/// Coefficient of P_m in p, read off by exact projection.
[[nodiscard]] Rational projected_coefficient(const Poly& p, int m);

/// P_n(lambda x) computed along the Rodrigues derivation: shift (lambda x)^2 - 1
/// into lambda^2 ((x^2 - 1) + (lambda^2 - 1) / lambda^2), expand binomially,
/// differentiate term by term. Throws std::invalid_argument for lambda = 0.
[[nodiscard]] Poly replay_rodrigues_derivation(const Rational& lambda, int n);

[[nodiscard]] Counterexample make_counterexample(std::string parameters, const Poly& lhs, const Poly& rhs);
[[nodiscard]] Counterexample make_counterexample(std::string parameters, std::vector<Rational> lhs,
                                                 std::vector<Rational> rhs);

}  // namespace legscale::oracle
