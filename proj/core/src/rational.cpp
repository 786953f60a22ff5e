#include "legscale/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace legscale {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Optional sign followed by at least one digit.
bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return all_digits(s);
}

mpz_class parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  mpz_class value(std::string(s), 10);
  return negative ? mpz_class(-value) : value;
}

mpz_class power_of_ten(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    if (!is_integer_literal(exp_part) || exp_part.size() > 6) {
      throw ParseError("malformed exponent in '" + std::string(text) + "'");
    }
    exponent = std::stol(std::string(exp_part));
    s = s.substr(0, e);
  }

  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw ParseError("not a number: '" + std::string(text) + "'");
  }

  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  exponent -= static_cast<long>(frac_part.size());

  mpq_class q(mantissa);
  if (exponent >= 0) {
    q *= power_of_ten(static_cast<unsigned long>(exponent));
  } else {
    q /= power_of_ten(static_cast<unsigned long>(-exponent));
  }
  q.canonicalize();
  return Rational(std::move(q));
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
      throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(parse_integer(num), d);
    q.canonicalize();
    return Rational(std::move(q));
  }
  if (is_integer_literal(text)) return Rational(mpq_class(parse_integer(text)));
  return parse_decimal(text);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw std::domain_error("zero raised to a negative power");
    return Rational(1) / pow(-exponent);
  }
  mpz_class num;
  mpz_class den;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
  // Powers of coprime integers stay coprime.
  mpq_class q;
  q.get_num() = num;
  q.get_den() = den;
  return Rational(std::move(q));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::size_t Rational::bit_size() const {
  return mpz_sizeinbase(value_.get_num_mpz_t(), 2) + mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace legscale
