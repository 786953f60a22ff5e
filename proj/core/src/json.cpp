#include "legscale/json.hpp"

#include <string>

namespace legscale {

namespace {

int parse_index(const std::string& key) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(key, &used);
  } catch (const std::exception&) {
    throw ParseError("not an index: '" + key + "'");
  }
  if (used != key.size() || value < 0) throw ParseError("not an index: '" + key + "'");
  return value;
}

}  // namespace

void to_json(nlohmann::json& j, const Rational& r) { j = r.str(); }

void from_json(const nlohmann::json& j, Rational& r) {
  if (j.is_string()) {
    r = Rational::parse(j.get<std::string>());
  } else if (j.is_number_integer()) {
    r = Rational(j.get<long>());
  } else {
    throw ParseError("rational must be a \"p/q\" string or an integer");
  }
}

void to_json(nlohmann::json& j, const Poly& p) {
  auto coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c);
  j = nlohmann::json{{"coeffs", std::move(coeffs)}};
}

void from_json(const nlohmann::json& j, Poly& p) {
  p = Poly(j.at("coeffs").get<std::vector<Rational>>());
}

void to_json(nlohmann::json& j, const LegendreSeries& s) {
  auto terms = nlohmann::json::object();
  for (const auto& [m, c] : s.terms()) terms[std::to_string(m)] = c;
  j = nlohmann::json{{"terms", std::move(terms)}};
}

void from_json(const nlohmann::json& j, LegendreSeries& s) {
  s = LegendreSeries();
  for (const auto& [key, value] : j.at("terms").items()) s.add(parse_index(key), value.get<Rational>());
}

void to_json(nlohmann::json& j, const DerivExpansion& e) {
  auto alphas = nlohmann::json::object();
  for (std::size_t i = 0; i < e.alphas.size(); ++i) {
    alphas[std::to_string(e.degree_of(static_cast<int>(i)))] = e.alphas[i];
  }
  j = nlohmann::json{{"n", e.n}, {"k", e.k}, {"alphas", std::move(alphas)}};
}

void from_json(const nlohmann::json& j, DerivExpansion& e) {
  e = DerivExpansion{};
  e.n = j.at("n").get<int>();
  e.k = j.at("k").get<int>();
  if (e.n < 0 || e.k < 0) throw ParseError("negative degree or order");
  if (e.k <= e.n) e.alphas.resize(static_cast<std::size_t>((e.n - e.k) / 2) + 1);
  for (const auto& [key, value] : j.at("alphas").items()) {
    const int degree = parse_index(key);
    const int offset = e.n - e.k - degree;
    if (offset < 0 || offset % 2 != 0 || e.k > e.n) throw ParseError("alpha degree " + key + " not in expansion");
    e.alphas[static_cast<std::size_t>(offset / 2)] = value.get<Rational>();
  }
}

void to_json(nlohmann::json& j, const ScalingExpansion& e) {
  auto coeffs = nlohmann::json::object();
  for (const auto& [k, c] : e.coeffs) coeffs[std::to_string(k)] = c;
  j = nlohmann::json{
      {"lambda", e.lambda}, {"n", e.n}, {"form", std::string(to_string(e.form))}, {"coeffs", std::move(coeffs)}};
}

void from_json(const nlohmann::json& j, ScalingExpansion& e) {
  e = ScalingExpansion{};
  e.lambda = j.at("lambda").get<Rational>();
  e.n = j.at("n").get<int>();
  e.form = parse_expansion_form(j.at("form").get<std::string>());
  for (const auto& [key, value] : j.at("coeffs").items()) {
    const int k = parse_index(key);
    if (2 * k > e.n) throw ParseError("coefficient index " + key + " exceeds floor(n/2)");
    e.set(k, value.get<Rational>());
  }
}

namespace oracle {

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json{{"subject", r.subject},
                     {"n_max", r.n_max},
                     {"k_range", r.k_range},
                     {"lambdas", r.lambdas},
                     {"cases", r.cases},
                     {"status", r.passed() ? "pass" : "fail"},
                     {"notes", r.notes}};
  if (r.counterexample) {
    j["counterexample"] = {{"parameters", r.counterexample->parameters},
                           {"lhs", r.counterexample->lhs},
                           {"rhs", r.counterexample->rhs}};
  } else {
    j["counterexample"] = nullptr;
  }
}

}  // namespace oracle

}  // namespace legscale
