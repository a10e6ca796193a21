#pragma once

#include <json.hpp>

#include "vlink/invariants.hpp"
#include "vlink/poly.hpp"

namespace vlink {

// LaurentPolynomial <-> [[exponent, coefficient], ...] sorted by exponent
nlohmann::ordered_json lp_to_json(const LaurentPolynomial& p);
LaurentPolynomial lp_from_json(const nlohmann::json& j);

// ExponentSum <-> [{"coeff": int, "exp": LP-json}, ...] in canonical key order
nlohmann::ordered_json es_to_json(const ExponentSum& e);
ExponentSum es_from_json(const nlohmann::json& j);

nlohmann::ordered_json report_to_json(const InvariantReport& r);

}  // namespace vlink
