#include "growthlab/core/event.hpp"

#include <array>

#include "growthlab/core/outcome.hpp"

namespace growthlab {

namespace {

constexpr std::array<std::string_view, 37> kEventNames = {
    "game_started",    "turn_started",     "turn_ended",       "phase_changed",
    "die_rolled",      "moved",            "paid",             "gained_money",
    "gained_followers", "lost_followers",  "card_drawn",       "card_discarded",
    "card_stored",     "card_transferred", "solution_spent",   "deck_reshuffled",
    "deck_exhausted",  "study_started",    "study_progressed", "skill_learned",
    "slush_entered",   "slush_progressed", "slush_left",       "trade_proposed",
    "trade_accepted",  "trade_rejected",   "salaries_waived",  "upkeep_waiver_granted",
    "payroll_failed",  "hack_played",      "reroll_used",      "hack_succeeded",
    "hack_failed",     "employee_hired",   "employee_refused", "employee_fired",
    "game_ended",
};
static_assert(kEventNames.size() == static_cast<std::size_t>(EventKind::game_ended) + 1);

constexpr std::array<std::string_view, 6> kDeckNames = {
    "none", "bonus", "prob_solve", "event", "hack", "employee",
};

}  // namespace

std::string_view to_string(OutcomeStatus status) noexcept {
  switch (status) {
    case OutcomeStatus::ongoing: return "ongoing";
    case OutcomeStatus::won: return "won";
    case OutcomeStatus::lost: return "lost";
  }
  return "ongoing";
}

std::string_view to_string(LossReason reason) noexcept {
  return reason == LossReason::bankrupt ? "bankrupt" : "turns_exhausted";
}

std::string_view to_string(EventKind kind) noexcept {
  return kEventNames[static_cast<std::size_t>(kind)];
}

std::optional<EventKind> event_kind_from_string(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kEventNames.size(); ++i) {
    if (kEventNames[i] == name) return static_cast<EventKind>(i);
  }
  return std::nullopt;
}

std::string_view to_string(DeckKind deck) noexcept {
  return kDeckNames[static_cast<std::size_t>(deck)];
}

std::optional<DeckKind> deck_kind_from_string(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kDeckNames.size(); ++i) {
    if (kDeckNames[i] == name) return static_cast<DeckKind>(i);
  }
  return std::nullopt;
}

nlohmann::json to_json(const Event& event) {
  nlohmann::json doc;
  doc["seq"] = event.sequence;
  doc["kind"] = to_string(event.kind);
  doc["turn"] = event.turn;
  if (event.actor >= 0) doc["actor"] = event.actor;
  if (event.counterparty >= 0) doc["counterparty"] = event.counterparty;
  if (event.space >= 0) doc["space"] = event.space;
  if (event.deck != DeckKind::none) doc["deck"] = to_string(event.deck);
  if (event.card >= 0) doc["card"] = event.card;
  if (event.money != 0) doc["money"] = event.money;
  if (event.followers != 0) doc["followers"] = event.followers;
  if (event.value != 0) doc["value"] = event.value;
  if (!event.detail.empty()) doc["detail"] = event.detail;
  if (!event.cards.empty()) doc["cards"] = event.cards;
  return doc;
}

Event event_from_json(const nlohmann::json& doc) {
  Event event;
  event.sequence = doc.at("seq").get<std::uint64_t>();
  const auto kind = event_kind_from_string(doc.at("kind").get<std::string>());
  if (!kind) throw std::invalid_argument("unknown event kind");
  event.kind = *kind;
  event.turn = doc.at("turn").get<int>();
  event.actor = doc.value("actor", -1);
  event.counterparty = doc.value("counterparty", -1);
  event.space = doc.value("space", -1);
  if (doc.contains("deck")) {
    const auto deck = deck_kind_from_string(doc["deck"].get<std::string>());
    if (!deck) throw std::invalid_argument("unknown deck");
    event.deck = *deck;
  }
  event.card = doc.value("card", -1);
  event.money = doc.value("money", std::int64_t{0});
  event.followers = doc.value("followers", std::int64_t{0});
  event.value = doc.value("value", std::int64_t{0});
  event.detail = doc.value("detail", std::string{});
  if (doc.contains("cards")) event.cards = doc["cards"].get<std::vector<int>>();
  return event;
}

}  // namespace growthlab
