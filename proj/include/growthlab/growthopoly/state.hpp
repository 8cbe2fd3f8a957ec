#pragma once

#include <map>
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

namespace growthlab::growthopoly {

using pack::SkillCategory;

/// Sub-phase of the current turn. Trades may only be proposed while awaiting
/// the roll or while a problem card is pending.
enum class Phase {
  awaiting_roll,
  slush_roll,
  skill_offer,
  trade_fair_offer,
  problem_pending,
  trade_pending,
  turn_over,
  ended,
};

std::string_view to_string(Phase phase) noexcept;
std::optional<Phase> phase_from_string(std::string_view name) noexcept;

/// Study progress on one skill space; 0 turns remaining means learned.
struct StudyRecord {
  int turns_remaining = 0;
  bool learned() const { return turns_remaining == 0; }
  friend bool operator==(const StudyRecord&, const StudyRecord&) = default;
};

struct PlayerSpec {
  std::string id;
  SkillCategory specialty = SkillCategory::search_engine_optimization;
};

struct PlayerState {
  std::string id;
  SkillCategory specialty = SkillCategory::search_engine_optimization;
  int position = 0;
  Resources resources;
  std::map<int, StudyRecord> skills;  // space index -> progress
  std::vector<int> solutions;          // prob-solve card indices, kept sorted
  std::optional<int> slush;            // turns remaining inside Slush

  /// Space currently being studied, if any.
  std::optional<int> studying() const;
  friend bool operator==(const PlayerState&, const PlayerState&) = default;
};

/// A proposed exchange. The proposer gives at most one stored solution and/or
/// money; in return they ask for money and/or one solution countering
/// `want_tag`, which the counterparty picks when accepting.
struct Trade {
  int counterparty = -1;
  int give_card = -1;
  Money give_money = 0;
  std::string want_tag;
  Money receive_money = 0;
  friend bool operator==(const Trade&, const Trade&) = default;
};

struct PendingTrade {
  int proposer = -1;
  Trade trade;
  Phase resume_phase = Phase::awaiting_roll;
  friend bool operator==(const PendingTrade&, const PendingTrade&) = default;
};

struct GrowthopolyState {
  pack::PackPtr pack;
  std::string pack_digest;
  std::vector<PlayerState> players;
  int current_player = 0;
  int turn_number = 1;
  Phase phase = Phase::awaiting_roll;
  int trades_proposed = 0;
  int held_card = -1;  // prob-solve problem awaiting resolution
  std::optional<PendingTrade> pending_trade;
  DeckState bonus;
  DeckState prob_solve;
  RngStream rng;
  GameOutcome outcome;
  std::vector<Event> events;

  /// Player holding (learned or studying) a skill space, or -1.
  int owner_of(int space) const;
  DeckState& deck(DeckKind kind);
  const DeckState& deck(DeckKind kind) const;
};

enum class MoveKind {
  roll_and_move,
  begin_study,
  decline_study,
  buy_followers,
  decline_trade_fair,
  play_solution,
  propose_trade,
  respond_trade,
  end_turn,
};

std::string_view to_string(MoveKind kind) noexcept;
std::optional<MoveKind> move_kind_from_string(std::string_view name) noexcept;

struct Move {
  MoveKind kind = MoveKind::end_turn;
  int space = -1;    // begin_study, buy_followers
  int card = -1;     // play_solution: solution; respond_trade: card handed over
  int problem = -1;  // play_solution
  Trade trade;       // propose_trade
  bool accept = false;

  static Move of(MoveKind kind) {
    Move m;
    m.kind = kind;
    return m;
  }
  friend bool operator==(const Move&, const Move&) = default;
};

}  // namespace growthlab::growthopoly
