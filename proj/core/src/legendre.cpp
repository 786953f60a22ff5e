#include "legscale/legendre.hpp"

#include <stdexcept>
#include <utility>

#include "legscale/combinatorics.hpp"

namespace legscale {

namespace {

void require_degree(int n) {
  if (n < 0) throw std::invalid_argument("Legendre degree must be nonnegative");
}

}  // namespace

std::vector<Poly> legendre_table(int n_max) {
  require_degree(n_max);
  std::vector<Poly> table;
  table.reserve(static_cast<std::size_t>(n_max) + 1);
  table.push_back(Poly::constant(Rational(1)));
  if (n_max >= 1) table.push_back(Poly::identity());
  const Poly x = Poly::identity();
  for (int m = 1; m < n_max; ++m) {
    // P_{m+1} = ((2m+1) x P_m - m P_{m-1}) / (m+1)
    Poly next = x * table[static_cast<std::size_t>(m)] * Rational(2 * m + 1);
    next -= table[static_cast<std::size_t>(m - 1)] * Rational(m);
    next *= Rational(1, m + 1);
    table.push_back(std::move(next));
  }
  return table;
}

Poly legendre_bonnet(int n) {
  require_degree(n);
  return std::move(legendre_table(n).back());
}

Poly legendre_rodrigues(int n) {
  require_degree(n);
  // (x^2 - 1)^n = sum_j C(n, j) (-1)^(n-j) x^(2j)
  std::vector<Rational> coeffs(2 * static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    Rational c = binomial(n, j);
    if ((n - j) % 2 != 0) c = -c;
    coeffs[2 * static_cast<std::size_t>(j)] = std::move(c);
  }
  Poly p = differentiate(Poly(std::move(coeffs)), n);
  p *= Rational(1) / (Rational(2).pow(n) * factorial(n));
  return p;
}

Poly legendre_murphy(int n) {
  require_degree(n);
  const Poly z{Rational(1, 2), Rational(-1, 2)};  // (1 - x) / 2
  Poly result;
  Poly z_power = Poly::constant(Rational(1));
  for (int j = 0; j <= n; ++j) {
    // (-n)_j (n+1)_j / ((1)_j j!)
    Rational weight = rising_factorial(Rational(-n), j) * rising_factorial(Rational(n + 1), j) /
                      (rising_factorial(Rational(1), j) * factorial(j));
    result += z_power * weight;
    z_power *= z;
  }
  return result;
}

LegendreSeries::LegendreSeries(const std::map<int, Rational>& terms) {
  for (const auto& [m, c] : terms) set(m, c);
}

void LegendreSeries::set(int m, const Rational& c) {
  if (m < 0) throw std::invalid_argument("Legendre degree must be nonnegative");
  if (c.is_zero()) {
    terms_.erase(m);
  } else {
    terms_[m] = c;
  }
}

void LegendreSeries::add(int m, const Rational& c) { set(m, coeff(m) + c); }

Rational LegendreSeries::coeff(int m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> LegendreSeries::max_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

LegendreSeries& LegendreSeries::operator+=(const LegendreSeries& rhs) {
  for (const auto& [m, c] : rhs.terms_) add(m, c);
  return *this;
}

LegendreSeries& LegendreSeries::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Poly to_poly(const LegendreSeries& s) {
  auto top = s.max_degree();
  if (!top) return Poly();
  const auto table = legendre_table(*top);
  Poly result;
  for (const auto& [m, c] : s.terms()) result += table[static_cast<std::size_t>(m)] * c;
  return result;
}

LegendreSeries project_to_legendre(const Poly& p) {
  LegendreSeries s;
  auto deg = p.degree();
  if (!deg) return s;
  const auto table = legendre_table(*deg);
  for (int m = 0; m <= *deg; ++m) {
    s.set(m, inner_product(p, table[static_cast<std::size_t>(m)]) * Rational(2 * m + 1, 2));
  }
  return s;
}

}  // namespace legscale
