#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "thetapark/macdonald_qt.hpp"
#include "thetapark/paths.hpp"
#include "thetapark/sym_func.hpp"

namespace thetapark {

// Polynomial wire format: [[exponent, "coefficient"], ...], exponents
// ascending, coefficients decimal strings.
nlohmann::json poly_to_json(const QPoly& p);
QPoly poly_from_json(const nlohmann::json& j);

// {"degree": n, "basis": "e", "terms": [{"eta": [...], "poly": ...}, ...]}
nlohmann::json expansion_to_json(const EExpansion& e);
EExpansion expansion_from_json(const nlohmann::json& j);

// {"P": "NNE..", "Q": "EEN..", "w": [...], "area": k, "eta": [...]}
nlohmann::json path_pair_to_json(const PathPair& p);
PathPair path_pair_from_json(const nlohmann::json& j);

nlohmann::json epositivity_to_json(const EPositivityReport& report);

Partition parse_partition(const std::string& csv); // "3,1" or "" for empty

} // namespace thetapark
