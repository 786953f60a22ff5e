#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "legscale/legendre.hpp"
#include "legscale/rational.hpp"

namespace legscale {

/// Legendre coefficients of d^k P_n / dx^k.
///
/// alphas[i] multiplies P_{n-k-2i}, for i = 0 .. floor((n-k)/2). Empty when
/// k > n, since the derivative vanishes.
struct DerivExpansion {
  int n = 0;
  int k = 0;
  std::vector<Rational> alphas;

  /// Degree of the Legendre polynomial that alphas[i] multiplies.
  [[nodiscard]] int degree_of(int i) const { return n - k - 2 * i; }
  [[nodiscard]] Rational alpha(int i) const;
  [[nodiscard]] LegendreSeries to_series() const;

  friend bool operator==(const DerivExpansion&, const DerivExpansion&) = default;
};

enum class ExpansionForm {
  derivative,  ///< sum_k a_k d^k P_{n-k} / dx^k
  legendre,    ///< sum_k b_k P_{n-2k}
};

[[nodiscard]] std::string_view to_string(ExpansionForm form);
/// Throws ParseError for anything but "derivative" or "legendre".
[[nodiscard]] ExpansionForm parse_expansion_form(std::string_view text);

/// One of the two expansions of P_n(lambda x), keyed by k = 0 .. floor(n/2).
/// Only nonzero coefficients are stored.
struct ScalingExpansion {
  Rational lambda;
  int n = 0;
  ExpansionForm form = ExpansionForm::legendre;
  std::map<int, Rational> coeffs;

  [[nodiscard]] Rational coeff(int k) const;
  void set(int k, const Rational& c);

  friend bool operator==(const ScalingExpansion&, const ScalingExpansion&) = default;
};

}  // namespace legscale
