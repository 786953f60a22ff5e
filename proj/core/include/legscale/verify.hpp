#pragma once

// Verification sweeps: each one generates candidates with the expansion
// modules and judges them with the brute-force oracle.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "legscale/expansions.hpp"
#include "legscale/oracle.hpp"
#include "legscale/rational.hpp"

namespace legscale::verify {

using oracle::VerificationReport;

/// {0, 1, -1, 2, 1/2, -3/5, 7/3}
[[nodiscard]] std::vector<Rational> default_lambdas();

/// count rationals p/q with |p| <= bound and 1 <= q <= bound, from a
/// std::mt19937_64 seeded with seed.
[[nodiscard]] std::vector<Rational> random_lambdas(std::uint64_t seed, int count = 20, int bound = 9);

/// Rebuilds each expansion of P_n(lambda x) in the monomial basis and compares
/// it with direct substitution, for n = 0 .. n_max.
[[nodiscard]] VerificationReport verify_scaling_identity(int n_max, std::span<const Rational> lambdas,
                                                         ExpansionForm form);

/// b_{lambda,n,k} against the projection of P_n(lambda x) onto P_{n-2k}.
[[nodiscard]] VerificationReport verify_projection_agreement(int n_max, std::span<const Rational> lambdas);

/// Legendre form against the regrouped derivative form.
[[nodiscard]] VerificationReport verify_composition(int n_max, std::span<const Rational> lambdas);

/// Evaluates b with both inner-sum limits over the sweep and records the
/// verdict. Fails only if the shipped limit misses the oracle.
[[nodiscard]] VerificationReport resolve_sum_limit(int n_max, std::span<const Rational> lambdas);

/// All three derivative-expansion routes against differentiate(P_n, k),
/// for 0 <= k <= n <= n_max.
[[nodiscard]] VerificationReport verify_derivative_identity(int n_max);

/// Coefficient-by-coefficient agreement of the closed recurrence with the
/// telescoping and triangular routes, and of the shifted-index recurrence
/// with the closed one.
[[nodiscard]] VerificationReport verify_recurrence_agreement(int n_max);

/// Redundant rows of the matching system hold for the solved alphas.
[[nodiscard]] VerificationReport verify_surplus_rows(int n_max);

/// Derivation replay against direct substitution. Throws
/// std::invalid_argument if lambdas contains 0.
[[nodiscard]] VerificationReport verify_replay(int n_max, std::span<const Rational> lambdas);

enum class Suite { all, eq9, eq13, eq19, eq26, replay };

[[nodiscard]] std::optional<Suite> parse_suite(std::string_view name);

/// Runs every report belonging to the suite, in a fixed order. For
/// Suite::all the replay part silently drops lambda = 0.
[[nodiscard]] std::vector<VerificationReport> run_suite(Suite suite, int n_max, std::span<const Rational> lambdas);

}  // namespace legscale::verify
