#include "growthlab/gog/serialize.hpp"

#include <stdexcept>

#include "growthlab/core/digest.hpp"

namespace growthlab::gog {

using nlohmann::json;

namespace {

json deck_json(const DeckState& deck) { return {{"draw", deck.draw}, {"discard", deck.discard}}; }

}  // namespace

json to_canonical_json(const GogState& s, bool include_events) {
  json doc;
  doc["game"] = "game_of_growth";
  doc["pack"] = s.pack_digest;
  doc["rng"] = {{"seed", s.rng.master_seed()}, {"stream", s.rng.stream_index()}, {"cursor", s.rng.cursor()}};
  doc["startup_type"] = pack::to_string(s.startup_type);
  doc["week"] = s.week;
  doc["weeks_completed"] = s.weeks_completed;
  doc["phase"] = to_string(s.phase);
  doc["money"] = s.resources.money;
  doc["followers"] = s.resources.followers;
  doc["active_event"] = s.active_event;
  doc["hand"] = s.hand;
  doc["played"] = s.played;
  auto roster = json::array();
  for (const auto& entry : s.roster) roster.push_back({{"card", entry.card}, {"hired_week", entry.hired_week}});
  doc["roster"] = std::move(roster);
  doc["pending_employee"] = s.pending_employee;
  doc["employee_revealed"] = s.employee_revealed;
  doc["employee_decided"] = s.employee_decided;
  doc["rerolls_used"] = s.rerolls_used;
  doc["waive_next_upkeep"] = s.waive_next_upkeep;
  doc["bankrupt"] = s.bankrupt;
  doc["decks"] = {{"event", deck_json(s.event_cards)},
                  {"hack", deck_json(s.hack_cards)},
                  {"employee", deck_json(s.employee_cards)}};
  json outcome = {{"status", to_string(s.outcome.status)}, {"turns_elapsed", s.outcome.turns_elapsed}};
  outcome["winner"] = s.outcome.winner ? json(*s.outcome.winner) : json(nullptr);
  outcome["loss_reason"] = s.outcome.loss_reason ? json(to_string(*s.outcome.loss_reason)) : json(nullptr);
  doc["outcome"] = std::move(outcome);
  if (include_events) {
    auto events = json::array();
    for (const auto& e : s.events) events.push_back(growthlab::to_json(e));
    doc["events"] = std::move(events);
  }
  return doc;
}

std::string state_digest(const GogState& state) { return digest_hex(fnv1a64(to_canonical_json(state, true).dump())); }

std::string position_digest(const GogState& state) {
  return digest_hex(fnv1a64(to_canonical_json(state, false).dump()));
}

json to_json(const Move& move) {
  json doc = {{"kind", to_string(move.kind)}};
  if (move.kind == MoveKind::play_hack || move.kind == MoveKind::fire) doc["index"] = move.index;
  return doc;
}

Move move_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw std::invalid_argument("move needs a string 'kind'");
  }
  const auto kind = move_kind_from_string(doc["kind"].get<std::string>());
  if (!kind) throw std::invalid_argument("unknown move kind");
  Move m = Move::of(*kind);
  if (*kind == MoveKind::play_hack || *kind == MoveKind::fire) m.index = doc.at("index").get<int>();
  return m;
}

}  // namespace growthlab::gog
