#pragma once

#include <map>
#include <optional>
#include <vector>

#include "legscale/poly.hpp"
#include "legscale/rational.hpp"

namespace legscale {

// Three independent constructions of P_n in the monomial basis. They must
// agree exactly; each is kept free of the others' code.

/// Three-term recurrence (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}.
[[nodiscard]] Poly legendre_bonnet(int n);

/// (1 / (2^n n!)) d^n/dx^n (x^2 - 1)^n, expanded binomially.
[[nodiscard]] Poly legendre_rodrigues(int n);

/// Terminating hypergeometric series 2F1(-n, n+1; 1; (1-x)/2).
[[nodiscard]] Poly legendre_murphy(int n);

/// P_0 .. P_{n_max} by the recurrence, in one pass.
[[nodiscard]] std::vector<Poly> legendre_table(int n_max);

/// Finite combination sum_m c_m P_m(x). Zero coefficients are never stored.
class LegendreSeries {
 public:
  LegendreSeries() = default;
  explicit LegendreSeries(const std::map<int, Rational>& terms);

  /// Overwrites c_m; assigning zero erases the term.
  void set(int m, const Rational& c);
  void add(int m, const Rational& c);

  [[nodiscard]] Rational coeff(int m) const;
  [[nodiscard]] const std::map<int, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] std::optional<int> max_degree() const;

  LegendreSeries& operator+=(const LegendreSeries& rhs);
  LegendreSeries& operator*=(const Rational& scalar);

  friend bool operator==(const LegendreSeries&, const LegendreSeries&) = default;

 private:
  std::map<int, Rational> terms_;
};

/// sum_m c_m P_m, with P_m from the recurrence.
[[nodiscard]] Poly to_poly(const LegendreSeries& s);

/// c_m = (2m+1)/2 * <p, P_m>, using the exact integral over [-1, 1].
[[nodiscard]] LegendreSeries project_to_legendre(const Poly& p);

}  // namespace legscale
