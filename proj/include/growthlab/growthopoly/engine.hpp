#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "growthlab/growthopoly/state.hpp"

namespace growthlab::growthopoly {

inline constexpr int kMinPlayers = 2;
inline constexpr int kMaxPlayers = 8;
inline constexpr int kSlushTurns = 3;

/// Turns a skill takes to learn: its level, one less for the specialty,
/// floored at 0 (0 = learned on payment).
int study_duration(int level, bool is_specialty);

/// Followers granted by a skill: doubled for the specialty.
Followers follower_reward(Followers base, bool is_specialty);

/// Throws GameError("invalid_pack" | "needs_opponents" | "too_many_players" |
/// "bad_player_id").
GrowthopolyState new_game(pack::PackPtr pack, const std::vector<PlayerSpec>& players, std::uint64_t seed);
GrowthopolyState new_game(pack::PackPtr pack, const std::vector<PlayerSpec>& players, RngStream rng);

/// Player who must decide next: the counterparty while a trade is pending,
/// otherwise the current player.
int acting_player(const GrowthopolyState& state);

/// All legal moves for the acting player in a fixed order. Empty once the game
/// is over.
std::vector<Move> legal_moves(const GrowthopolyState& state);

struct Applied {
  GrowthopolyState state;
  std::vector<Event> events;
};

/// Pure transition. Throws IllegalMove (state untouched) when `move` is not in
/// legal_moves(state).
Applied apply_move(const GrowthopolyState& state, const Move& move);

/// In-place transition; returns the number of events appended.
std::size_t apply_move_in_place(GrowthopolyState& state, const Move& move);

/// Mutates `state` by exactly the delta `event` describes and appends it to the
/// log. Every engine mutation after construction goes through here.
void apply_event(GrowthopolyState& state, const Event& event);

/// Folds the events after initial.events onto `initial`.
GrowthopolyState replay(GrowthopolyState initial, std::span<const Event> events);

}  // namespace growthlab::growthopoly
