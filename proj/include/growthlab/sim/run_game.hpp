#pragma once

#include <optional>
#include <string>
#include <vector>

#include "growthlab/gog/state.hpp"
#include "growthlab/growthopoly/state.hpp"
#include "growthlab/sim/policy.hpp"

namespace growthlab::sim {

struct GogRun {
  gog::GogState initial;
  gog::GogState final_state;
  std::optional<std::string> diagnostic;  // set when the policy broke containment
};

GogRun play_gog(pack::PackPtr pack, pack::StartupType startup, const Policy& policy, RngStream game_stream,
                RngStream policy_stream);

struct GrowthopolyRun {
  growthopoly::GrowthopolyState initial;
  growthopoly::GrowthopolyState final_state;
  std::optional<std::string> diagnostic;
};

/// Stops after `max_turns` turns; such games stay ongoing.
GrowthopolyRun play_growthopoly(pack::PackPtr pack, const std::vector<growthopoly::PlayerSpec>& players,
                                const std::vector<const Policy*>& seats, RngStream game_stream,
                                RngStream policy_stream, int max_turns);

/// Seat specs used by the simulator: ids p0..pn-1, specialties cycling
/// through the skill categories.
std::vector<growthopoly::PlayerSpec> sim_players(int seats);

}  // namespace growthlab::sim
