#pragma once

#include <string>

#include <json.hpp>

#include "growthlab/gog/state.hpp"

namespace growthlab::gog {

nlohmann::json to_canonical_json(const GogState& state, bool include_events = true);
std::string state_digest(const GogState& state);
std::string position_digest(const GogState& state);

nlohmann::json to_json(const Move& move);
Move move_from_json(const nlohmann::json& doc);

}  // namespace growthlab::gog
