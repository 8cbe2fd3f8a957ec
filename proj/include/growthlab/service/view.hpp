#pragma once

#include <json.hpp>

#include "growthlab/gog/state.hpp"
#include "growthlab/growthopoly/state.hpp"

namespace growthlab::service {

/// Seat-scoped projections. Seat -1 is a spectator. Views never carry the rng
/// or draw-pile order, and show other seats' solutions only as a count.
nlohmann::json seat_view(const growthopoly::GrowthopolyState& state, int seat);
nlohmann::json seat_view(const gog::GogState& state, int seat);

/// Event as `seat` may see it: drops hidden card ids and reshuffle orders.
nlohmann::json redact_event(const Event& event, const pack::ContentPack& pack, int seat);

/// One-line human descriptions for terminal play.
std::string describe_move(const growthopoly::GrowthopolyState& state, const growthopoly::Move& move);
std::string describe_move(const gog::GogState& state, const gog::Move& move);
std::string describe_event(const Event& event, const pack::ContentPack& pack, int seat);

}  // namespace growthlab::service
