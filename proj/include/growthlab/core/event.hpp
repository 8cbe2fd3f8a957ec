#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace growthlab {

enum class DeckKind { none, bonus, prob_solve, event, hack, employee };

enum class EventKind {
  game_started,
  turn_started,
  turn_ended,
  phase_changed,
  die_rolled,
  moved,
  paid,
  gained_money,
  gained_followers,
  lost_followers,
  card_drawn,
  card_discarded,
  card_stored,
  card_transferred,
  solution_spent,
  deck_reshuffled,
  deck_exhausted,
  study_started,
  study_progressed,
  skill_learned,
  slush_entered,
  slush_progressed,
  slush_left,
  trade_proposed,
  trade_accepted,
  trade_rejected,
  salaries_waived,
  upkeep_waiver_granted,
  payroll_failed,
  hack_played,
  reroll_used,
  hack_succeeded,
  hack_failed,
  employee_hired,
  employee_refused,
  employee_fired,
  game_ended,
};

/// One audited state delta. Which fields are meaningful depends on `kind`;
/// the per-kind layout is listed in docs/state_format.md. Unused fields keep
/// their defaults and are omitted from the serialized form.
struct Event {
  std::uint64_t sequence = 0;
  EventKind kind = EventKind::game_started;
  int turn = 0;
  int actor = -1;
  int counterparty = -1;
  int space = -1;
  DeckKind deck = DeckKind::none;
  int card = -1;
  std::int64_t money = 0;
  std::int64_t followers = 0;
  std::int64_t value = 0;
  std::string detail;
  std::vector<int> cards;

  friend bool operator==(const Event&, const Event&) = default;
};

std::string_view to_string(EventKind kind) noexcept;
std::optional<EventKind> event_kind_from_string(std::string_view name) noexcept;
std::string_view to_string(DeckKind deck) noexcept;
std::optional<DeckKind> deck_kind_from_string(std::string_view name) noexcept;

nlohmann::json to_json(const Event& event);
Event event_from_json(const nlohmann::json& doc);

}  // namespace growthlab
