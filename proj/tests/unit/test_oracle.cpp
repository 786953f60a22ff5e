#include <doctest.h>

#include "legscale/deriv_expand.hpp"
#include "legscale/legendre.hpp"
#include "legscale/oracle.hpp"
#include "legscale/scale_expand.hpp"
#include "legscale/verify.hpp"

using namespace legscale;

TEST_CASE("scaling identity sweeps pass on the documented examples") {
  const std::vector<Rational> two{Rational(2)};
  const std::vector<Rational> one{Rational(1)};
  const std::vector<Rational> minus_one{Rational(-1)};
  CHECK(verify::verify_scaling_identity(10, two, ExpansionForm::legendre).passed());
  for (auto form : {ExpansionForm::derivative, ExpansionForm::legendre}) {
    const auto identity = verify::verify_scaling_identity(10, one, form);
    CHECK(identity.passed());
    CHECK(identity.cases == 11);
    CHECK(verify::verify_scaling_identity(10, minus_one, form).passed());
  }
  for (int n = 0; n <= 10; ++n) {
    CHECK(expand_legendre_form(Rational(1), n).coeffs == std::map<int, Rational>{{0, Rational(1)}});
    CHECK(expand_derivative_form(Rational(1), n).coeffs == std::map<int, Rational>{{0, Rational(1)}});
  }
}

TEST_CASE("derivative identity sweep") {
  const auto report = verify::verify_derivative_identity(12);
  CHECK(report.passed());
  CHECK(report.subject == "eq19");
  CHECK(oracle::reconstruct(deriv_expand_recurrence(5, 5)) == Poly::constant(Rational(945)));
  CHECK(oracle::reconstruct(deriv_expand_recurrence(4, 6)).is_zero());
  CHECK(verify::verify_derivative_identity(0).passed());
}

TEST_CASE("derivation replay") {
  CHECK(oracle::replay_rodrigues_derivation(Rational(2), 3) == oracle::scaled_legendre(3, Rational(2)));
  for (int n = 0; n <= 12; ++n) CHECK(oracle::replay_rodrigues_derivation(Rational(1), n) == legendre_bonnet(n));
  CHECK(oracle::replay_rodrigues_derivation(Rational(1, 2), 4) == oracle::scaled_legendre(4, Rational(1, 2)));
  CHECK_THROWS_WITH_AS((void)oracle::replay_rodrigues_derivation(Rational(0), 2), "lambda=0 invalid for replay",
                       std::invalid_argument);
  const std::vector<Rational> with_zero{Rational(1), Rational(0)};
  CHECK_THROWS_AS((void)verify::verify_replay(3, with_zero), std::invalid_argument);
}

TEST_CASE("a wrong expansion is caught with full coefficient dumps") {
  auto tampered = expand_legendre_form(Rational(3, 2), 6);
  tampered.set(2, tampered.coeff(2) + Rational(1, 1000));
  const Poly claimed = oracle::reconstruct(tampered);
  const Poly truth = oracle::scaled_legendre(6, Rational(3, 2));
  CHECK(claimed != truth);
  const auto c = oracle::make_counterexample("n=6", claimed, truth);
  CHECK(c.lhs.size() == 7);
  CHECK(c.rhs.size() == 7);

  auto wrong_derivative = deriv_expand_recurrence(5, 1);
  wrong_derivative.alphas.back() += Rational(1);
  CHECK(oracle::reconstruct(wrong_derivative) != differentiate(legendre_bonnet(5), 1));
}

TEST_CASE("projected coefficients") {
  const Poly p = oracle::scaled_legendre(2, Rational(2));
  CHECK(oracle::projected_coefficient(p, 2) == Rational(4));
  CHECK(oracle::projected_coefficient(p, 0) == Rational(3, 2));
  CHECK(oracle::projected_coefficient(p, 1) == Rational(0));
}

TEST_CASE("report status follows the counterexample") {
  oracle::VerificationReport report;
  CHECK(report.passed());
  report.counterexample = oracle::Counterexample{"n=1", {}, {}};
  CHECK_FALSE(report.passed());
}

TEST_CASE("suites") {
  const auto lambdas = verify::default_lambdas();
  const auto reports = verify::run_suite(verify::Suite::all, 6, lambdas);
  CHECK(reports.size() == 9);
  for (const auto& r : reports) {
    CAPTURE(r.subject);
    CHECK(r.passed());
    CHECK(r.cases > 0);
  }
  CHECK(reports.back().subject == "replay");
  CHECK(reports.back().lambdas.size() == lambdas.size() - 1);

  const auto limit = verify::resolve_sum_limit(8, lambdas);
  REQUIRE(limit.notes.size() == 4);
  CHECK(limit.notes[0] == "upper limits max(k-1,0) and k give identical b coefficients on every case");

  CHECK_THROWS_AS((void)verify::run_suite(verify::Suite::replay, 4, lambdas), std::invalid_argument);
  CHECK(verify::parse_suite("eq26") == verify::Suite::eq26);
  CHECK_FALSE(verify::parse_suite("eq99").has_value());
}

TEST_CASE("seeded random lambdas are reproducible and bounded") {
  const auto first = verify::random_lambdas(42);
  CHECK(first == verify::random_lambdas(42));
  CHECK(first != verify::random_lambdas(43));
  CHECK(first.size() == 20);
  for (const auto& l : first) {
    CHECK(abs(l.numerator()) <= 9);
    CHECK(l.denominator() <= 9);
  }
}
