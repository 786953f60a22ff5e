#pragma once

// Floating-point rendering for the command-line front end. The library itself
// stays exact; this layer turns exact coefficients into decimal strings and
// evaluates expansions numerically at a fixed working precision.

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/mpfr.hpp>

#include "legscale/rational.hpp"

namespace legscale::cli {

/// 100 significant decimal digits of working precision.
using Float = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<100>>;

inline constexpr int kMinDigits = 1;
inline constexpr int kMaxDigits = 50;

enum class EvalMethod { direct, a_form, b_form };

[[nodiscard]] std::optional<EvalMethod> parse_eval_method(std::string_view text);
[[nodiscard]] std::string_view to_string(EvalMethod method);

[[nodiscard]] Float to_float(const Rational& r);

/// Rounds to `digits` significant digits (nearest), trims trailing zeros and
/// keeps one digit after the point: 1 -> "1.0", -37/128 -> "-0.2890625".
/// Magnitudes outside [1e-6, 1e21) use "d.ddde+X" notation.
[[nodiscard]] std::string format_significant(const Float& value, int digits);

[[nodiscard]] std::string format_significant(const Rational& value, int digits);

/// P_n(lambda x) evaluated in floating point by the chosen route:
///   direct  three-term recurrence at t = lambda x
///   a_form  sum_k a_k (d^k P_{n-k} / dx^k)(x)
///   b_form  sum_k b_k P_{n-2k}(x)
[[nodiscard]] Float evaluate_scaled_legendre(int n, const Rational& lambda, const Rational& x, EvalMethod method);

}  // namespace legscale::cli
