#pragma once

// JSON wire forms:
//   Rational          "p/q", or "p" for integers; both forms are read back
//   Poly              {"coeffs": ["p/q", ...]}           ascending degree
//   LegendreSeries    {"terms": {"m": "p/q", ...}}
//   DerivExpansion    {"n": n, "k": k, "alphas": {"degree": "p/q", ...}}
//   ScalingExpansion  {"lambda": "p/q", "n": n, "form": "derivative"|"legendre",
//                      "coeffs": {"k": "p/q", ...}}

#include <nlohmann/json.hpp>

#include "legscale/expansions.hpp"
#include "legscale/legendre.hpp"
#include "legscale/oracle.hpp"
#include "legscale/poly.hpp"
#include "legscale/rational.hpp"

namespace legscale {

void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);

void to_json(nlohmann::json& j, const Poly& p);
void from_json(const nlohmann::json& j, Poly& p);

void to_json(nlohmann::json& j, const LegendreSeries& s);
void from_json(const nlohmann::json& j, LegendreSeries& s);

void to_json(nlohmann::json& j, const DerivExpansion& e);
void from_json(const nlohmann::json& j, DerivExpansion& e);

void to_json(nlohmann::json& j, const ScalingExpansion& e);
void from_json(const nlohmann::json& j, ScalingExpansion& e);

namespace oracle {
void to_json(nlohmann::json& j, const VerificationReport& r);
}  // namespace oracle

}  // namespace legscale
