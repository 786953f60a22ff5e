#include "legscale/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace legscale {

namespace {

void require_nonnegative(int value, const char* what) {
  if (value < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

}  // namespace

Rational falling_factorial(const Rational& x, int n) {
  require_nonnegative(n, "falling factorial length");
  Rational product(1);
  Rational term = x;
  for (int t = 0; t < n; ++t) {
    product *= term;
    if (product.is_zero()) break;
    term -= 1;
  }
  return product;
}

Rational rising_factorial(const Rational& a, int j) {
  require_nonnegative(j, "rising factorial length");
  Rational product(1);
  Rational term = a;
  for (int t = 0; t < j; ++t) {
    product *= term;
    if (product.is_zero()) break;
    term += 1;
  }
  return product;
}

Rational factorial(int n) {
  require_nonnegative(n, "factorial argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(f));
}

Rational binomial(int n, int k) {
  require_nonnegative(n, "binomial n");
  require_nonnegative(k, "binomial k");
  if (k > n) return Rational(0);
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(c));
}

}  // namespace legscale
