#pragma once

// JSON forms of the library's values. Big integers and rationals are
// always strings ("77/240"), so documents survive any JSON reader.

#include <json.hpp>

#include "partpoly/averages.hpp"
#include "partpoly/calculus.hpp"
#include "partpoly/density.hpp"
#include "partpoly/partition.hpp"
#include "partpoly/search.hpp"

namespace partpoly {

/// {"multiplicities": ["m1", ..., "mk"]}
nlohmann::json to_json(const Partition& lambda);

/// Accepts {"multiplicities": [...]} or {"parts": [...]}; entries may be
/// numbers or decimal strings. Throws std::invalid_argument otherwise.
Partition partition_from_json(const nlohmann::json& doc);

/// {"coefficients": ["c0", "c1", ...]}, lowest degree first.
nlohmann::json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const nlohmann::json& doc);

/// {"exact": "num/den", "decimal": "0.123"}
nlohmann::json rational_json(const BigRational& value, unsigned decimal_digits);

nlohmann::json to_json(const AvgReport& report, unsigned decimal_digits);
nlohmann::json to_json(const DensityTrace& trace, bool full_partition, unsigned decimal_digits);
nlohmann::json to_json(const CollisionReport& report);

} // namespace partpoly
