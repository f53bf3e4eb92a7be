#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "blockers/cardinality.hpp"
#include "blockers/oracle.hpp"
#include "blockers/position_set.hpp"
#include "blockers/rank.hpp"
#include "blockers/search.hpp"

namespace blockers {

// Permutations serialize as one-line notation arrays, e.g. [4,1,3,2].
nlohmann::json to_json(const Permutation& p);
// {"n": int, "cells": [[r,c],...]} with row-major sorted cells.
nlohmann::json to_json(const PositionSet& ps);
nlohmann::json to_json(const FlagSpec& spec);
nlohmann::json to_json(const BlockerVerdict& v);
nlohmann::json to_json(const FaceReport& r);
nlohmann::json to_json(const CardinalityAudit& a);
nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const ConjectureReport& r);

Permutation permutation_from_json(const nlohmann::json& j);
PositionSet position_set_from_json(const nlohmann::json& j);
FlagSpec flag_spec_from_json(const nlohmann::json& j);
SearchResult search_result_from_json(const nlohmann::json& j);

/// Position-set input sniffing: a body whose first non-whitespace byte is
/// '{' is parsed as JSON, anything else as a '.'/'X' text grid.
PositionSet load_position_set(std::string_view text);

} // namespace blockers
