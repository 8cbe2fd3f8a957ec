#pragma once

#include <cstdint>
#include <vector>

#include "growthlab/pack/content_pack.hpp"
#include "growthlab/sim/policy.hpp"
#include "growthlab/sim/report.hpp"

namespace growthlab::sim {

struct SimConfig {
  pack::Game game = pack::Game::game_of_growth;
  pack::PackPtr pack;
  std::vector<PolicyPtr> policies;  // one per seat, or a single policy for every seat
  std::int64_t num_games = 1;
  std::uint64_t master_seed = 0;
  bool collect_trajectories = false;
  int seats = 2;                                                // Growthopoly
  pack::StartupType startup_type = pack::StartupType::tech;     // Game of Growth
  int max_turns = 500;                                          // Growthopoly cap
  int threads = 0;                                              // 0 = as many as available
};

/// Throws GameError("invalid_config" | "invalid_pack") before any game runs.
void validate_config(const SimConfig& config);

/// OpenMP across games. Game i uses derive_stream(master_seed, i).
SimReport run_batch(const SimConfig& config);
/// Single-threaded reference; must agree with run_batch byte for byte.
SimReport run_batch_serial(const SimConfig& config);

struct HackModifiers {
  Ratio hack_cost_multiplier = Ratio::one();
  Ratio follower_gain_multiplier = Ratio::one();
  int discount_percent = 0;
};

struct HackEv {
  Ratio expected_followers;
  Ratio expected_net_cost;
  std::optional<Ratio> followers_per_dollar;  // only when net cost > 0
};

HackEv hack_card_ev(const pack::HackCardDef& card, const HackModifiers& modifiers = {});

/// Successes over `trials` isolated resolutions; trial i rolls on
/// derive_stream(master_seed, i).
std::int64_t hack_trial_successes(const pack::HackCardDef& card, std::int64_t trials, std::uint64_t master_seed);

}  // namespace growthlab::sim
