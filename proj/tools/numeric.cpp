#include "numeric.hpp"

#include <memory>
#include <stdexcept>
#include <vector>

#include <mpfr.h>

#include "legscale/legendre.hpp"
#include "legscale/poly.hpp"
#include "legscale/scale_expand.hpp"

namespace legscale::cli {

namespace {

// Sums that cancel to zero leave residue at the level of the working
// precision; anything this far below the term magnitudes is treated as zero.
const Float kNoiseFloor("1e-85");

Float legendre_value(int n, const Float& t) {
  Float previous = 1;
  if (n == 0) return previous;
  Float current = t;
  for (int m = 1; m < n; ++m) {
    Float next = ((2 * m + 1) * t * current - m * previous) / (m + 1);
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

Float horner(const Poly& p, const Float& x) {
  Float acc = 0;
  const auto coeffs = p.coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + to_float(*it);
  return acc;
}

Float suppress_noise(const Float& total, const Float& magnitude) {
  if (abs(total) <= magnitude * kNoiseFloor) return Float(0);
  return total;
}

}  // namespace

std::optional<EvalMethod> parse_eval_method(std::string_view text) {
  if (text == "direct") return EvalMethod::direct;
  if (text == "a-form") return EvalMethod::a_form;
  if (text == "b-form") return EvalMethod::b_form;
  return std::nullopt;
}

std::string_view to_string(EvalMethod method) {
  switch (method) {
    case EvalMethod::direct:
      return "direct";
    case EvalMethod::a_form:
      return "a-form";
    case EvalMethod::b_form:
      return "b-form";
  }
  return "direct";
}

Float to_float(const Rational& r) {
  Float f;
  mpfr_set_q(f.backend().data(), r.gmp().get_mpq_t(), MPFR_RNDN);
  return f;
}

std::string format_significant(const Float& value, int digits) {
  if (digits < kMinDigits || digits > kMaxDigits) throw std::invalid_argument("digits must lie in 1..50");
  if (value == 0) return "0.0";

  mpfr_exp_t exponent = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exponent, 10, static_cast<std::size_t>(digits), value.backend().data(), MPFR_RNDN),
      &mpfr_free_str);
  std::string mantissa(raw.get());

  std::string sign;
  if (!mantissa.empty() && mantissa.front() == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  while (mantissa.size() > 1 && mantissa.back() == '0') mantissa.pop_back();

  // value = 0.<mantissa> * 10^exponent
  const auto len = static_cast<long>(mantissa.size());
  const long point = exponent;
  if (point > -6 && point <= 21) {
    if (point <= 0) return sign + "0." + std::string(static_cast<std::size_t>(-point), '0') + mantissa;
    if (point >= len) return sign + mantissa + std::string(static_cast<std::size_t>(point - len), '0') + ".0";
    return sign + mantissa.substr(0, static_cast<std::size_t>(point)) + "." +
           mantissa.substr(static_cast<std::size_t>(point));
  }
  std::string out = sign + mantissa.substr(0, 1) + "." + (len > 1 ? mantissa.substr(1) : std::string("0"));
  const long e = point - 1;
  out += e < 0 ? "e-" : "e+";
  out += std::to_string(e < 0 ? -e : e);
  return out;
}

std::string format_significant(const Rational& value, int digits) {
  return format_significant(to_float(value), digits);
}

Float evaluate_scaled_legendre(int n, const Rational& lambda, const Rational& x, EvalMethod method) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  const Float xf = to_float(x);

  switch (method) {
    case EvalMethod::direct:
      return legendre_value(n, to_float(lambda) * xf);

    case EvalMethod::a_form: {
      const auto table = legendre_table(n);
      Float total = 0;
      Float magnitude = 0;
      for (int k = 0; 2 * k <= n; ++k) {
        const Float term =
            to_float(a_coefficient(lambda, n, k)) * horner(differentiate(table[static_cast<std::size_t>(n - k)], k), xf);
        total += term;
        magnitude += abs(term);
      }
      return suppress_noise(total, magnitude);
    }

    case EvalMethod::b_form: {
      Float total = 0;
      Float magnitude = 0;
      for (int k = 0; 2 * k <= n; ++k) {
        const Float term = to_float(b_coefficient(lambda, n, k)) * legendre_value(n - 2 * k, xf);
        total += term;
        magnitude += abs(term);
      }
      return suppress_noise(total, magnitude);
    }
  }
  throw std::invalid_argument("unknown evaluation method");
}

}  // namespace legscale::cli
