#pragma once

#include <string_view>

#include <json.hpp>

#include "fmchow/polynomial.hpp"
#include "fmchow/rank_vector.hpp"

namespace fmchow {

/// Parses "h1^2*x12 - 3/2*h2 + (h1+h2)^2" over the table. Division is only
/// allowed by nonzero constants. Throws ArgumentError with the offending column.
Polynomial parse_polynomial(std::string_view text, const TablePtr& table);

Rational parse_rational(std::string_view text);

/// [{"coeff": "p/q", "exps": {"h1": 2}}, ...] in canonical term order.
nlohmann::ordered_json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::ordered_json& j, const TablePtr& table);

nlohmann::ordered_json rank_vector_to_json(const RankVector& r);

}  // namespace fmchow
