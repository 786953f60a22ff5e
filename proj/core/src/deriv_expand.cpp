#include "legscale/deriv_expand.hpp"

#include <map>
#include <string>

#include "legscale/combinatorics.hpp"

namespace legscale {

namespace {

void require_indices(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("degree and derivative order must be nonnegative");
}

DerivExpansion empty_expansion(int n, int k) { return DerivExpansion{n, k, {}}; }

const Rational kHalf(1, 2);

}  // namespace

DerivExpansion deriv_expand_telescoping(int n, int k) {
  require_indices(n, k);
  if (k > n) return empty_expansion(n, k);

  std::map<int, Rational> current{{n, Rational(1)}};
  for (int pass = 0; pass < k; ++pass) {
    std::map<int, Rational> next;
    for (const auto& [m, c] : current) {
      for (int d = m - 1; d >= 0; d -= 2) next[d] += c * Rational(2 * d + 1);
    }
    current = std::move(next);
  }

  DerivExpansion out = empty_expansion(n, k);
  const int terms = (n - k) / 2 + 1;
  out.alphas.reserve(static_cast<std::size_t>(terms));
  for (int i = 0; i < terms; ++i) out.alphas.push_back(current[n - k - 2 * i]);
  return out;
}

std::vector<Rational> murphy_deriv_series(int n, int k) {
  require_indices(n, k);
  if (k > n) throw std::domain_error("hypergeometric derivative series needs k <= n");

  const Rational prefactor =
      binomial(n, k) * rising_factorial(Rational(n + 1), k) / Rational(2).pow(k);
  std::vector<Rational> series;
  series.reserve(static_cast<std::size_t>(n - k) + 1);
  for (int j = 0; j <= n - k; ++j) {
    series.push_back(prefactor * rising_factorial(Rational(k - n), j) *
                     rising_factorial(Rational(n + 1 + k), j) /
                     rising_factorial(Rational(1 + k), j));
  }
  return series;
}

Rational murphy_legendre_weight(int j, int m) {
  require_indices(m, j);
  return rising_factorial(Rational(-m), j) * rising_factorial(Rational(m + 1), j) /
         rising_factorial(Rational(1), j);
}

Rational murphy_legendre_weight_shifted(int j, int top, int i) {
  require_indices(top, j);
  if (i < 0 || 2 * i > top) throw std::invalid_argument("shift index out of range");
  const Rational base = murphy_legendre_weight(j, top);
  if (base.is_zero()) return base;
  return base * falling_factorial(Rational(top - j), 2 * i) /
         falling_factorial(Rational(top + j), 2 * i);
}

bool TriangularSolution::consistent() const {
  for (const auto& row : surplus_rows) {
    if (row.lhs != row.rhs) return false;
  }
  return true;
}

TriangularSolution solve_matching_system(int n, int k) {
  require_indices(n, k);
  TriangularSolution solution{empty_expansion(n, k), {}};
  if (k > n) return solution;

  const int top = n - k;
  const auto a = murphy_deriv_series(n, k);
  auto& alphas = solution.expansion.alphas;

  // Row j reads A_j = sum_i alpha_i B_{j, top-2i}. Rows with j = top-2i bring in
  // alpha_i on the diagonal; the rows between them only re-check known values.
  for (int j = top; j >= 0; --j) {
    Rational known(0);
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      known += alphas[i] * murphy_legendre_weight_shifted(j, top, static_cast<int>(i));
    }
    if ((top - j) % 2 == 0) {
      const int i = (top - j) / 2;
      const Rational pivot = murphy_legendre_weight_shifted(j, top, i);
      if (pivot.is_zero()) {
        throw DegeneratePivotError("zero pivot at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                   " j=" + std::to_string(j));
      }
      alphas.push_back((a[static_cast<std::size_t>(j)] - known) / pivot);
    } else {
      solution.surplus_rows.push_back(SurplusRow{j, a[static_cast<std::size_t>(j)], known});
    }
  }
  return solution;
}

DerivExpansion deriv_expand_triangular(int n, int k) {
  auto solution = solve_matching_system(n, k);
  if (!solution.consistent()) {
    throw InconsistentSystemError("redundant matching rows violated at n=" + std::to_string(n) +
                                  " k=" + std::to_string(k));
  }
  return std::move(solution.expansion);
}

std::vector<Rational> alpha_closed_recurrence_upto(int n, int k, int i) {
  require_indices(n, k);
  if (k > n || i < 0 || 2 * i > n - k) throw std::invalid_argument("alpha index out of range");

  const Rational n_half = Rational(n) - kHalf;
  const Rational top_half = Rational(n - k) - kHalf;
  const Rational lead_common = falling_factorial(n_half, k);

  std::vector<Rational> memo;
  memo.reserve(static_cast<std::size_t>(i) + 1);
  for (int s = 0; s <= i; ++s) {
    Rational value = Rational(2).pow(k + 2 * s) * lead_common * falling_factorial(Rational(n - s), s) *
                     falling_factorial(top_half, 2 * s) /
                     (factorial(2 * s) * falling_factorial(n_half, s));
    for (int l = 0; l < s; ++l) {
      const int span = 2 * (s - l);
      value -= falling_factorial(Rational(2 * (n - k - s - l)), span) / factorial(span) *
               memo[static_cast<std::size_t>(l)];
    }
    memo.push_back(std::move(value));
  }
  return memo;
}

Rational alpha_closed_recurrence(int n, int k, int i) {
  return std::move(alpha_closed_recurrence_upto(n, k, i).back());
}

DerivExpansion deriv_expand_recurrence(int n, int k) {
  require_indices(n, k);
  if (k > n) return empty_expansion(n, k);
  return DerivExpansion{n, k, alpha_closed_recurrence_upto(n, k, (n - k) / 2)};
}

Rational alpha_shifted_recurrence(int n, int k, int i) {
  require_indices(n, k);
  if (2 * k > n || i < 0 || 2 * i > n - 2 * k) throw std::invalid_argument("alpha index out of range");

  const Rational shifted_half = Rational(n - k) - kHalf;
  const Rational low_half = Rational(n - 2 * k) - kHalf;

  std::vector<Rational> memo;
  for (int s = 0; s <= i; ++s) {
    Rational value = Rational(2).pow(k + 2 * s) * falling_factorial(shifted_half, k) *
                     falling_factorial(Rational(n - k - s), s) * falling_factorial(low_half, 2 * s) /
                     (factorial(2 * s) * falling_factorial(shifted_half, s));
    for (int l = 0; l < s; ++l) {
      const int span = 2 * (s - l);
      value -= falling_factorial(Rational(2 * (n - 2 * k - s - l)), span) / factorial(span) *
               memo[static_cast<std::size_t>(l)];
    }
    memo.push_back(std::move(value));
  }
  return memo.back();
}

}  // namespace legscale
