#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "legscale/rational.hpp"

namespace legscale {

/// Dense univariate polynomial over the rationals, monomial basis.
///
/// coeffs()[m] is the coefficient of x^m. The highest stored coefficient is
/// never zero; the zero polynomial stores nothing and has no degree.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  /// c x^m
  static Poly monomial(const Rational& c, int m);
  static Poly identity();

  [[nodiscard]] std::optional<int> degree() const;
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }

  /// Coefficient of x^m; zero beyond the degree.
  [[nodiscard]] Rational coeff(int m) const;

  /// Horner evaluation.
  [[nodiscard]] Rational operator()(const Rational& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& scalar);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend Poly operator*(Poly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Rational& lhs, Poly rhs) { return rhs *= lhs; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

[[nodiscard]] Poly pow(const Poly& p, int exponent);

/// k-fold formal derivative; the zero polynomial once k exceeds the degree.
[[nodiscard]] Poly differentiate(const Poly& p, int k = 1);

/// q(x) = p(lambda x).
[[nodiscard]] Poly scale_argument(const Poly& p, const Rational& lambda);

/// Exact integral of p(x) q(x) over [-1, 1].
[[nodiscard]] Rational inner_product(const Poly& p, const Poly& q);

}  // namespace legscale
