#pragma once
#include <string>
#include <vector>

#include "json.hpp"
#include "nzeta/error.hpp"
#include "nzeta/fan.hpp"
#include "nzeta/pipelines.hpp"
#include "nzeta/zeta.hpp"

namespace nzeta::json_io {

using Json = nlohmann::ordered_json;

Json rational(const Rational& q);  // "p/q" string
Json integer(const Integer& z);     // number when it fits, else decimal string
Json exponent(const Exponent& e);
Json weight(const WeightVector& w);
Json cone(const Cone& c);
Json zeta(const ZetaFactored& z);  // [[period, exponent], ...] ascending
Json fan(const Fan& f);
Json hypotheses(const std::vector<HypothesisCheck>& hs);
Json error(const Error& e);

Rational parse_rational_json(const Json& j);
Fan parse_fan(const Json& j);
Cone parse_cone(const Json& j);
// {"points": [...]} or a bare list of {chart, point, mu, change}
std::vector<LocalPointData> parse_local_data(const Json& j, int n);

Json read_file(const std::string& path);

}  // namespace nzeta::json_io
