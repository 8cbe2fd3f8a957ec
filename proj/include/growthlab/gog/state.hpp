#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "growthlab/core/deck.hpp"
#include "growthlab/core/event.hpp"
#include "growthlab/core/outcome.hpp"
#include "growthlab/core/resources.hpp"
#include "growthlab/core/rng.hpp"
#include "growthlab/pack/content_pack.hpp"

namespace growthlab::gog {

using pack::StartupType;

inline constexpr Money kStartingMoney = 5000;
inline constexpr int kTurns = 10;
inline constexpr int kHandSize = 3;

/// `event` is only passed through inside draw_event; no move boundary ever
/// observes it.
enum class Phase { upkeep, event, hacks, employee, ended };

std::string_view to_string(Phase phase) noexcept;
std::optional<Phase> phase_from_string(std::string_view name) noexcept;

struct RosterEntry {
  int card = -1;
  int hired_week = 0;
  friend bool operator==(const RosterEntry&, const RosterEntry&) = default;
};

struct GogState {
  pack::PackPtr pack;
  std::string pack_digest;
  StartupType startup_type = StartupType::tech;
  Resources resources;
  int week = 1;
  int weeks_completed = 0;
  Phase phase = Phase::upkeep;
  int active_event = -1;
  std::vector<int> hand;
  std::vector<int> played;  // hacks used this turn, discarded with the hand
  std::vector<RosterEntry> roster;
  int pending_employee = -1;
  bool employee_revealed = false;
  bool employee_decided = false;
  int rerolls_used = 0;
  bool waive_next_upkeep = false;
  bool bankrupt = false;
  DeckState event_cards;
  DeckState hack_cards;
  DeckState employee_cards;
  RngStream rng;
  GameOutcome outcome;
  std::vector<Event> events;

  DeckState& deck(DeckKind kind);
  const DeckState& deck(DeckKind kind) const;
};

enum class MoveKind { draw_event, play_hack, skip_remaining_hacks, reveal_employee, hire, refuse, fire, end_turn };

std::string_view to_string(MoveKind kind) noexcept;
std::optional<MoveKind> move_kind_from_string(std::string_view name) noexcept;

struct Move {
  MoveKind kind = MoveKind::end_turn;
  int index = -1;  // hand slot for play_hack, roster slot for fire

  static Move of(MoveKind kind, int index = -1) { return Move{kind, index}; }
  friend bool operator==(const Move&, const Move&) = default;
};

}  // namespace growthlab::gog
