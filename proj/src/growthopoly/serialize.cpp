#include "growthlab/growthopoly/serialize.hpp"

#include <stdexcept>

#include "growthlab/core/digest.hpp"

namespace growthlab::growthopoly {

using nlohmann::json;

namespace {

json deck_json(const DeckState& deck) { return {{"draw", deck.draw}, {"discard", deck.discard}}; }

json outcome_json(const GameOutcome& outcome) {
  json doc = {{"status", to_string(outcome.status)}, {"turns_elapsed", outcome.turns_elapsed}};
  doc["winner"] = outcome.winner ? json(*outcome.winner) : json(nullptr);
  doc["loss_reason"] = outcome.loss_reason ? json(to_string(*outcome.loss_reason)) : json(nullptr);
  return doc;
}

}  // namespace

json to_canonical_json(const GrowthopolyState& s, bool include_events) {
  json doc;
  doc["game"] = "growthopoly";
  doc["pack"] = s.pack_digest;
  doc["rng"] = {{"seed", s.rng.master_seed()}, {"stream", s.rng.stream_index()}, {"cursor", s.rng.cursor()}};
  doc["turn"] = s.turn_number;
  doc["current_player"] = s.current_player;
  doc["phase"] = to_string(s.phase);
  doc["trades_proposed"] = s.trades_proposed;
  doc["held_card"] = s.held_card;
  if (s.pending_trade) {
    const auto& p = *s.pending_trade;
    doc["pending_trade"] = {{"proposer", p.proposer},
                            {"counterparty", p.trade.counterparty},
                            {"give_card", p.trade.give_card},
                            {"give_money", p.trade.give_money},
                            {"want_tag", p.trade.want_tag},
                            {"receive_money", p.trade.receive_money},
                            {"resume_phase", to_string(p.resume_phase)}};
  } else {
    doc["pending_trade"] = nullptr;
  }
  doc["decks"] = {{"bonus", deck_json(s.bonus)}, {"prob_solve", deck_json(s.prob_solve)}};
  auto players = json::array();
  for (const auto& p : s.players) {
    json skills = json::object();
    for (const auto& [space, record] : p.skills) skills[std::to_string(space)] = record.turns_remaining;
    players.push_back({{"id", p.id},
                       {"specialty", pack::to_string(p.specialty)},
                       {"position", p.position},
                       {"money", p.resources.money},
                       {"followers", p.resources.followers},
                       {"skills", std::move(skills)},
                       {"solutions", p.solutions},
                       {"slush", p.slush ? json(*p.slush) : json(nullptr)}});
  }
  doc["players"] = std::move(players);
  doc["outcome"] = outcome_json(s.outcome);
  if (include_events) {
    auto events = json::array();
    for (const auto& e : s.events) events.push_back(growthlab::to_json(e));
    doc["events"] = std::move(events);
  }
  return doc;
}

std::string state_digest(const GrowthopolyState& state) {
  return digest_hex(fnv1a64(to_canonical_json(state, true).dump()));
}

std::string position_digest(const GrowthopolyState& state) {
  return digest_hex(fnv1a64(to_canonical_json(state, false).dump()));
}

json to_json(const Move& move) {
  json doc = {{"kind", to_string(move.kind)}};
  switch (move.kind) {
    case MoveKind::begin_study:
    case MoveKind::buy_followers:
      doc["space"] = move.space;
      break;
    case MoveKind::play_solution:
      doc["card"] = move.card;
      doc["problem"] = move.problem;
      break;
    case MoveKind::propose_trade:
      doc["counterparty"] = move.trade.counterparty;
      doc["give_card"] = move.trade.give_card;
      doc["give_money"] = move.trade.give_money;
      doc["want_tag"] = move.trade.want_tag;
      doc["receive_money"] = move.trade.receive_money;
      break;
    case MoveKind::respond_trade:
      doc["accept"] = move.accept;
      doc["card"] = move.card;
      break;
    default:
      break;
  }
  return doc;
}

Move move_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw std::invalid_argument("move needs a string 'kind'");
  }
  const auto kind = move_kind_from_string(doc["kind"].get<std::string>());
  if (!kind) throw std::invalid_argument("unknown move kind");
  Move m = Move::of(*kind);
  switch (*kind) {
    case MoveKind::begin_study:
    case MoveKind::buy_followers:
      m.space = doc.at("space").get<int>();
      break;
    case MoveKind::play_solution:
      m.card = doc.at("card").get<int>();
      m.problem = doc.at("problem").get<int>();
      break;
    case MoveKind::propose_trade:
      m.trade.counterparty = doc.at("counterparty").get<int>();
      m.trade.give_card = doc.value("give_card", -1);
      m.trade.give_money = doc.value("give_money", Money{0});
      m.trade.want_tag = doc.value("want_tag", std::string{});
      m.trade.receive_money = doc.value("receive_money", Money{0});
      break;
    case MoveKind::respond_trade:
      m.accept = doc.at("accept").get<bool>();
      m.card = doc.value("card", -1);
      break;
    default:
      break;
  }
  return m;
}

}  // namespace growthlab::growthopoly
