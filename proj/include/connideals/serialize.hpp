#pragma once

#include <json.hpp>

#include "connideals/betti.hpp"
#include "connideals/ideal.hpp"

namespace connideals {

/// {"ground": n, "gens": [[sorted vertex indices], ...]}
nlohmann::json ideal_to_json(const SquarefreeIdeal& ideal);
/// Inverse of ideal_to_json; throws std::invalid_argument on schema errors
/// or a non-antichain generator list.
SquarefreeIdeal ideal_from_json(const nlohmann::json& j);

/// {"gens": [[...] in admissible order], "order": [generator indices],
///  "witness": [[k for each earlier position] per position]}
nlohmann::json order_to_json(const SquarefreeIdeal& ideal, const AdmissibleOrder& order);
AdmissibleOrder order_from_json(const nlohmann::json& j);

/// {"field": "q" | "gf2", "entries": [[i, j, rank], ...]} sorted by (i, j).
nlohmann::json betti_to_json(const BettiTable& table);

}  // namespace connideals
