#include "legscale/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "legscale/combinatorics.hpp"

namespace legscale {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int m) {
  if (m < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  std::vector<Rational> coeffs(static_cast<std::size_t>(m) + 1);
  coeffs.back() = c;
  return Poly(std::move(coeffs));
}

Poly Poly::identity() { return monomial(Rational(1), 1); }

std::optional<int> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

Rational Poly::coeff(int m) const {
  if (m < 0 || static_cast<std::size_t>(m) >= coeffs_.size()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(m)];
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t m = 0; m < rhs.coeffs_.size(); ++m) coeffs_[m] += rhs.coeffs_[m];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t m = 0; m < rhs.coeffs_.size(); ++m) coeffs_[m] -= rhs.coeffs_[m];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly pow(const Poly& p, int exponent) {
  if (exponent < 0) throw std::invalid_argument("polynomial power must be nonnegative");
  Poly result = Poly::constant(Rational(1));
  Poly base = p;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

Poly differentiate(const Poly& p, int k) {
  if (k < 0) throw std::invalid_argument("derivative order must be nonnegative");
  if (k == 0) return p;
  auto deg = p.degree();
  if (!deg || *deg < k) return Poly();
  std::vector<Rational> out(static_cast<std::size_t>(*deg - k) + 1);
  for (int m = k; m <= *deg; ++m) {
    // d^k/dx^k x^m = m^(k falling) x^(m-k)
    out[static_cast<std::size_t>(m - k)] = p.coeff(m) * falling_factorial(Rational(m), k);
  }
  return Poly(std::move(out));
}

Poly scale_argument(const Poly& p, const Rational& lambda) {
  std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
  Rational power(1);
  for (auto& c : out) {
    c *= power;
    power *= lambda;
  }
  return Poly(std::move(out));
}

Rational inner_product(const Poly& p, const Poly& q) {
  Rational total(0);
  const auto pc = p.coeffs();
  const auto qc = q.coeffs();
  for (std::size_t i = 0; i < pc.size(); ++i) {
    if (pc[i].is_zero()) continue;
    // Odd powers integrate to zero over the symmetric interval.
    for (std::size_t j = i % 2; j < qc.size(); j += 2) {
      if (qc[j].is_zero()) continue;
      const auto power = static_cast<long>(i + j);
      total += pc[i] * qc[j] * Rational(2, power + 1);
    }
  }
  return total;
}

}  // namespace legscale
