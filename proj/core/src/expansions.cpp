#include "legscale/expansions.hpp"

#include <string>

namespace legscale {

Rational DerivExpansion::alpha(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= alphas.size()) return Rational(0);
  return alphas[static_cast<std::size_t>(i)];
}

LegendreSeries DerivExpansion::to_series() const {
  LegendreSeries s;
  for (std::size_t i = 0; i < alphas.size(); ++i) s.add(degree_of(static_cast<int>(i)), alphas[i]);
  return s;
}

std::string_view to_string(ExpansionForm form) {
  return form == ExpansionForm::derivative ? "derivative" : "legendre";
}

ExpansionForm parse_expansion_form(std::string_view text) {
  if (text == "derivative") return ExpansionForm::derivative;
  if (text == "legendre") return ExpansionForm::legendre;
  throw ParseError("unknown expansion form '" + std::string(text) + "'");
}

Rational ScalingExpansion::coeff(int k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? Rational(0) : it->second;
}

void ScalingExpansion::set(int k, const Rational& c) {
  if (c.is_zero()) {
    coeffs.erase(k);
  } else {
    coeffs[k] = c;
  }
}

}  // namespace legscale
