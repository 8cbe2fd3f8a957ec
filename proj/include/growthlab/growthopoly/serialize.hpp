#pragma once

#include <string>

#include <json.hpp>

#include "growthlab/growthopoly/state.hpp"

namespace growthlab::growthopoly {

/// Canonical key-sorted form; layout documented in docs/state_format.md.
nlohmann::json to_canonical_json(const GrowthopolyState& state, bool include_events = true);

/// Digest of the full canonical form (event log included).
std::string state_digest(const GrowthopolyState& state);
/// Digest of the canonical form without the event log.
std::string position_digest(const GrowthopolyState& state);

nlohmann::json to_json(const Move& move);
/// Throws std::invalid_argument on an unrecognised document.
Move move_from_json(const nlohmann::json& doc);

}  // namespace growthlab::growthopoly
