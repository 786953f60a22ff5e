#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace legscale {

/// Raised when a textual rational ("p/q", "-7", "0.25") cannot be read.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact signed rational number of unbounded size.
///
/// Always held in lowest terms with a positive denominator, so equality is
/// structural. Zero is 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral U>
  Rational(U value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(long numerator, long denominator);

  explicit Rational(mpq_class value);

  /// Accepts "p", "p/q" and plain decimals such as "-0.125" or "1e-3".
  static Rational parse(std::string_view text);

  /// "p/q", or "p" when the denominator is 1.
  [[nodiscard]] std::string str() const;

  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& gmp() const { return value_; }

  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

  [[nodiscard]] double to_double() const { return value_.get_d(); }

  /// Integer power; 0^0 is 1. Negative exponents invert, which fails for zero.
  [[nodiscard]] Rational pow(long exponent) const;

  [[nodiscard]] Rational abs() const;

  Rational operator-() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  /// Number of bits in numerator plus denominator; a cheap size measure.
  [[nodiscard]] std::size_t bit_size() const;

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace legscale
