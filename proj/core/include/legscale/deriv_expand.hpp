#pragma once

#include <stdexcept>
#include <vector>

#include "legscale/expansions.hpp"
#include "legscale/rational.hpp"

namespace legscale {

/// A diagonal entry of the hypergeometric matching system came out zero.
class DegeneratePivotError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A redundant row of the matching system is violated by the solved alphas.
class InconsistentSystemError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Expansion of d^k P_n / dx^k in Legendre polynomials, three ways. All entry
// points return an empty expansion for k > n and reject negative indices.

/// Applies d/dx P_m = sum_j (2(m-1-2j)+1) P_{m-1-2j} k times.
[[nodiscard]] DerivExpansion deriv_expand_telescoping(int n, int k);

/// Solves the coefficient-matching system in z = (1-x)/2 top-down.
[[nodiscard]] DerivExpansion deriv_expand_triangular(int n, int k);

/// Closed recurrence for alpha_{n-k-2i}, all i.
[[nodiscard]] DerivExpansion deriv_expand_recurrence(int n, int k);

/// A_j for j = 0 .. n-k: d^k P_n / dx^k = sum_j A_j z^j / j!, z = (1-x)/2.
/// Throws std::domain_error when k > n.
[[nodiscard]] std::vector<Rational> murphy_deriv_series(int n, int k);

/// B_{j,m} = (-m)_j (m+1)_j / (1)_j, the z^j / j! weight of P_m.
[[nodiscard]] Rational murphy_legendre_weight(int j, int m);

/// B_{j, top-2i} obtained from B_{j, top} by the falling-factorial ratio
/// (top-j)^(2i falling) / (top+j)^(2i falling).
[[nodiscard]] Rational murphy_legendre_weight_shifted(int j, int top, int i);

struct SurplusRow {
  int j = 0;
  Rational lhs;  ///< A_j
  Rational rhs;  ///< sum_i alpha_i B_{j, n-k-2i}
};

struct TriangularSolution {
  DerivExpansion expansion;
  /// Rows j = n-k-1, n-k-3, ...; never used to solve for an unknown.
  std::vector<SurplusRow> surplus_rows;

  [[nodiscard]] bool consistent() const;
};

/// Full solve including the redundant rows. Throws DegeneratePivotError.
[[nodiscard]] TriangularSolution solve_matching_system(int n, int k);

/// alpha_{n-k-2i} via the closed recurrence. Requires 0 <= k <= n and
/// 0 <= i <= floor((n-k)/2).
[[nodiscard]] Rational alpha_closed_recurrence(int n, int k, int i);

/// alpha_{n-k-2l} for l = 0 .. i, sharing one memo table.
[[nodiscard]] std::vector<Rational> alpha_closed_recurrence_upto(int n, int k, int i);

/// Coefficient of P_{n-2k-2i} in d^k P_{n-k} / dx^k, written with n, k as the
/// scaling expansion indexes them. Requires 0 <= 2k <= n, 0 <= i <= floor((n-2k)/2).
[[nodiscard]] Rational alpha_shifted_recurrence(int n, int k, int i);

}  // namespace legscale
