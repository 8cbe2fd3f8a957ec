#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "growthlab/core/rational.hpp"
#include "growthlab/gog/state.hpp"

namespace growthlab::gog {

/// (7 - threshold) / 6 for a single d6.
Ratio hack_success_probability(const pack::HackCardDef& card);

/// Throws GameError("invalid_pack" | "unknown_startup_type").
GogState new_game(pack::PackPtr pack, StartupType startup_type, std::uint64_t seed);
GogState new_game(pack::PackPtr pack, StartupType startup_type, RngStream rng);

/// Hack cost after this turn's event multiplier and the roster's discounts
/// (percent discounts add up, capped at 100).
Money effective_hack_cost(const GogState& state, int hack_card);
Money effective_hire_cost(const GogState& state, int employee_card);
/// This turn's follower multiplier (1 when no event is active).
Ratio follower_multiplier(const GogState& state);
/// Rerolls still available this turn.
int rerolls_left(const GogState& state);
/// Sum of roster salaries due at the next upkeep.
Money payroll(const GogState& state);

/// Outcome as a pure function of followers, bankruptcy and weeks completed.
GameOutcome check_outcome(const GogState& state);

std::vector<Move> legal_moves(const GogState& state);

struct Applied {
  GogState state;
  std::vector<Event> events;
};

/// Throws IllegalMove (state untouched) when `move` is not in legal_moves(state).
Applied apply_move(const GogState& state, const Move& move);
std::size_t apply_move_in_place(GogState& state, const Move& move);

void apply_event(GogState& state, const Event& event);
GogState replay(GogState initial, std::span<const Event> events);

}  // namespace growthlab::gog
