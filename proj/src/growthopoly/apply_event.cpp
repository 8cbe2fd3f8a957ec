#include <algorithm>
#include <stdexcept>

#include "growthlab/growthopoly/engine.hpp"

namespace growthlab::growthopoly {

namespace {

void insert_sorted(std::vector<int>& cards, int card) {
  cards.insert(std::upper_bound(cards.begin(), cards.end(), card), card);
}

void erase_one(std::vector<int>& cards, int card) {
  const auto it = std::find(cards.begin(), cards.end(), card);
  if (it == cards.end()) throw std::logic_error("event references a card the player does not hold");
  cards.erase(it);
}

}  // namespace

void apply_event(GrowthopolyState& s, const Event& e) {
  if (e.sequence != s.events.size() + 1) throw std::logic_error("event sequence gap");
  auto player = [&]() -> PlayerState& { return s.players.at(static_cast<std::size_t>(e.actor)); };

  switch (e.kind) {
    case EventKind::game_started:
    case EventKind::turn_ended:
    case EventKind::deck_exhausted:
      break;
    case EventKind::turn_started:
      s.current_player = e.actor;
      s.turn_number = e.turn;
      s.trades_proposed = 0;
      break;
    case EventKind::phase_changed: {
      const auto phase = phase_from_string(e.detail);
      if (!phase) throw std::logic_error("unknown phase in event");
      s.phase = *phase;
      break;
    }
    case EventKind::die_rolled:
      s.rng.advance(1);
      break;
    case EventKind::moved:
      player().position = e.space;
      break;
    case EventKind::paid:
    case EventKind::gained_money:
      player().resources.money += e.money;
      break;
    case EventKind::gained_followers:
    case EventKind::lost_followers:
      player().resources.followers += e.followers;
      break;
    case EventKind::card_drawn: {
      auto& deck = s.deck(e.deck);
      if (deck.draw.empty() || deck.draw.front() != e.card) throw std::logic_error("drawn card is not on top");
      deck.draw.erase(deck.draw.begin());
      s.held_card = e.card;
      break;
    }
    case EventKind::card_discarded:
      s.deck(e.deck).discard.push_back(e.card);
      if (s.held_card == e.card) s.held_card = -1;
      break;
    case EventKind::card_stored:
      insert_sorted(player().solutions, e.card);
      s.held_card = -1;
      break;
    case EventKind::card_transferred:
      erase_one(player().solutions, e.card);
      insert_sorted(s.players.at(static_cast<std::size_t>(e.counterparty)).solutions, e.card);
      break;
    case EventKind::solution_spent:
      erase_one(player().solutions, e.card);
      s.prob_solve.discard.push_back(e.card);
      break;
    case EventKind::deck_reshuffled: {
      auto& deck = s.deck(e.deck);
      deck.draw = e.cards;
      deck.discard.clear();
      s.rng.advance(static_cast<std::uint64_t>(e.value));
      break;
    }
    case EventKind::study_started:
    case EventKind::study_progressed:
      player().skills[e.space] = StudyRecord{static_cast<int>(e.value)};
      break;
    case EventKind::skill_learned:
      player().skills[e.space] = StudyRecord{0};
      break;
    case EventKind::slush_entered:
    case EventKind::slush_progressed:
      player().slush = static_cast<int>(e.value);
      break;
    case EventKind::slush_left:
      player().slush.reset();
      break;
    case EventKind::trade_proposed:
      s.pending_trade = PendingTrade{e.actor, Trade{e.counterparty, e.card, e.money, e.detail, e.value}, s.phase};
      ++s.trades_proposed;
      break;
    case EventKind::trade_accepted:
    case EventKind::trade_rejected:
      s.pending_trade.reset();
      break;
    case EventKind::game_ended:
      s.outcome.status = OutcomeStatus::won;
      s.outcome.winner = e.actor;
      s.outcome.turns_elapsed = s.turn_number;
      s.phase = Phase::ended;
      break;
    default:
      throw std::logic_error("event kind does not apply to Growthopoly");
  }
  s.events.push_back(e);
}

}  // namespace growthlab::growthopoly
