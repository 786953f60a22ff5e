#include <doctest.h>

#include <random>

#include "legscale/legendre.hpp"
#include "legscale/poly.hpp"
#include "support/independent.hpp"

using namespace legscale;

namespace {

const Poly kP2{Rational(-1, 2), Rational(0), Rational(3, 2)};

}  // namespace

TEST_CASE("poly normalizes trailing zeros") {
  const Poly p{Rational(1), Rational(0), Rational(0)};
  CHECK(p.degree() == 0);
  CHECK(Poly{}.is_zero());
  CHECK_FALSE(Poly{}.degree().has_value());
  CHECK(Poly{Rational(0)}.is_zero());
  CHECK((kP2 - kP2).is_zero());
}

TEST_CASE("poly arithmetic and evaluation") {
  const Poly x = Poly::identity();
  CHECK(x * x == Poly::monomial(Rational(1), 2));
  CHECK(pow(x + Poly::constant(Rational(1)), 3) == Poly{Rational(1), Rational(3), Rational(3), Rational(1)});
  CHECK(kP2(Rational(1)) == Rational(1));
  CHECK(kP2(Rational(0)) == Rational(-1, 2));
  CHECK(kP2.coeff(7) == Rational(0));
}

TEST_CASE("Bonnet construction") {
  CHECK(legendre_bonnet(0) == Poly{Rational(1)});
  CHECK(legendre_bonnet(2) == kP2);
  CHECK(legendre_bonnet(5)(Rational(1)) == Rational(1));
  CHECK_THROWS_AS((void)legendre_bonnet(-1), std::invalid_argument);
}

TEST_CASE("Rodrigues construction") {
  CHECK(legendre_rodrigues(0) == Poly{Rational(1)});
  CHECK(legendre_rodrigues(1) == Poly::identity());
}

TEST_CASE("Murphy construction") {
  CHECK(legendre_murphy(0) == Poly{Rational(1)});
  CHECK(legendre_murphy(1) == Poly::identity());
}

TEST_CASE("three constructions agree with each other and an explicit sum, n <= 40") {
  for (int n = 0; n <= 40; ++n) {
    CAPTURE(n);
    const Poly bonnet = legendre_bonnet(n);
    CHECK(bonnet == legendre_rodrigues(n));
    CHECK(bonnet == legendre_murphy(n));
    CHECK(bonnet == testing::legendre_explicit(n));
  }
}

TEST_CASE("endpoint normalization and parity, n <= 40") {
  const auto table = legendre_table(40);
  for (int n = 0; n <= 40; ++n) {
    CAPTURE(n);
    const Poly& p = table[static_cast<std::size_t>(n)];
    const Rational sign = n % 2 ? Rational(-1) : Rational(1);
    CHECK(p(Rational(1)) == Rational(1));
    CHECK(p(Rational(-1)) == sign);
    CHECK(scale_argument(p, Rational(-1)) == p * sign);
  }
}

TEST_CASE("differentiate") {
  CHECK(differentiate(Poly::monomial(Rational(1), 3), 1) == Poly::monomial(Rational(3), 2));
  CHECK(differentiate(kP2, 1) == Poly::monomial(Rational(3), 1));
  CHECK(differentiate(kP2, 0) == kP2);
  CHECK(differentiate(kP2, 3).is_zero());
  CHECK(differentiate(Poly{}, 2).is_zero());
  CHECK_THROWS_AS((void)differentiate(kP2, -1), std::invalid_argument);
}

TEST_CASE("scale_argument") {
  const Rational lambda(-7, 3);
  CHECK(scale_argument(Poly::identity(), lambda) == Poly::monomial(lambda, 1));
  CHECK(scale_argument(kP2, Rational(1)) == kP2);
  CHECK(scale_argument(kP2, Rational(2)) == Poly{Rational(-1, 2), Rational(0), Rational(6)});
  CHECK(scale_argument(kP2, Rational(0)) == Poly{Rational(-1, 2)});
}

TEST_CASE("inner products") {
  const auto table = legendre_table(25);
  CHECK(inner_product(table[1], table[1]) == Rational(2, 3));
  CHECK(inner_product(table[2], table[3]) == Rational(0));
  CHECK(inner_product(Poly{Rational(1)}, Poly{Rational(1)}) == Rational(2));
  CHECK(inner_product(Poly{}, table[4]) == Rational(0));

  for (int m = 0; m <= 25; ++m) {
    for (int n = 0; n <= 25; ++n) {
      const Rational expected = m == n ? Rational(2, 2 * n + 1) : Rational(0);
      CHECK(inner_product(table[static_cast<std::size_t>(m)], table[static_cast<std::size_t>(n)]) == expected);
    }
  }
}

TEST_CASE("projection onto Legendre polynomials") {
  const LegendreSeries x_squared = project_to_legendre(Poly::monomial(Rational(1), 2));
  CHECK(x_squared.terms() == std::map<int, Rational>{{0, Rational(1, 3)}, {2, Rational(2, 3)}});
  CHECK(project_to_legendre(legendre_bonnet(7)).terms() == std::map<int, Rational>{{7, Rational(1)}});
  CHECK(project_to_legendre(Poly{}).empty());
}

TEST_CASE("to_poly") {
  CHECK(to_poly(LegendreSeries({{1, Rational(3)}})) == Poly::monomial(Rational(3), 1));
  CHECK(to_poly(LegendreSeries({{0, Rational(1, 3)}, {2, Rational(2, 3)}})) == Poly::monomial(Rational(1), 2));
  CHECK(to_poly(LegendreSeries()).is_zero());
}

TEST_CASE("series never stores zeros") {
  LegendreSeries s({{3, Rational(0)}, {1, Rational(2)}});
  CHECK(s.terms().size() == 1);
  s.add(1, Rational(-2));
  CHECK(s.empty());
}

TEST_CASE("projection inverts to_poly on random series") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> degree(0, 30);
  std::uniform_int_distribution<int> count(0, 8);
  for (int trial = 0; trial < 60; ++trial) {
    LegendreSeries s;
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t) s.add(degree(rng), testing::random_rational(rng));
    CHECK(project_to_legendre(to_poly(s)) == s);
  }
}
