#include <algorithm>
#include <stdexcept>

#include "growthlab/gog/engine.hpp"

namespace growthlab::gog {

namespace {

void erase_one(std::vector<int>& cards, int card) {
  const auto it = std::find(cards.begin(), cards.end(), card);
  if (it == cards.end()) throw std::logic_error("event references a card that is not in play");
  cards.erase(it);
}

}  // namespace

void apply_event(GogState& s, const Event& e) {
  if (e.sequence != s.events.size() + 1) throw std::logic_error("event sequence gap");

  switch (e.kind) {
    case EventKind::game_started:
      break;
    case EventKind::turn_started:
      s.week = e.turn;
      break;
    case EventKind::turn_ended:
      s.weeks_completed = s.week;
      s.rerolls_used = 0;
      s.employee_revealed = false;
      s.employee_decided = false;
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
    case EventKind::paid:
    case EventKind::gained_money:
      s.resources.money += e.money;
      break;
    case EventKind::gained_followers:
    case EventKind::lost_followers:
    case EventKind::hack_succeeded:
      s.resources.followers += e.followers;
      break;
    case EventKind::card_drawn: {
      auto& deck = s.deck(e.deck);
      if (deck.draw.empty() || deck.draw.front() != e.card) throw std::logic_error("drawn card is not on top");
      deck.draw.erase(deck.draw.begin());
      if (e.deck == DeckKind::event) {
        s.active_event = e.card;
      } else if (e.deck == DeckKind::hack) {
        s.hand.push_back(e.card);
      } else {
        s.pending_employee = e.card;
        s.employee_revealed = true;
      }
      break;
    }
    case EventKind::card_discarded:
      if (e.deck == DeckKind::event) {
        if (s.active_event != e.card) throw std::logic_error("discarded event is not active");
        s.active_event = -1;
      } else if (e.deck == DeckKind::hack) {
        if (std::find(s.hand.begin(), s.hand.end(), e.card) != s.hand.end()) {
          erase_one(s.hand, e.card);
        } else {
          erase_one(s.played, e.card);
        }
      } else {
        throw std::logic_error("employees are not discarded directly");
      }
      s.deck(e.deck).discard.push_back(e.card);
      break;
    case EventKind::deck_reshuffled: {
      auto& deck = s.deck(e.deck);
      deck.draw = e.cards;
      deck.discard.clear();
      s.rng.advance(static_cast<std::uint64_t>(e.value));
      break;
    }
    case EventKind::deck_exhausted:
      if (e.deck == DeckKind::employee) {
        s.employee_revealed = true;
        s.employee_decided = true;
      }
      break;
    case EventKind::salaries_waived:
      s.waive_next_upkeep = false;
      break;
    case EventKind::upkeep_waiver_granted:
      s.waive_next_upkeep = true;
      break;
    case EventKind::payroll_failed:
      s.bankrupt = true;
      break;
    case EventKind::hack_played: {
      const auto slot = static_cast<std::size_t>(e.value);
      if (slot >= s.hand.size() || s.hand[slot] != e.card) throw std::logic_error("played hack is not in hand");
      s.hand.erase(s.hand.begin() + static_cast<std::ptrdiff_t>(slot));
      s.played.push_back(e.card);
      s.resources.money += e.money;
      break;
    }
    case EventKind::reroll_used:
      ++s.rerolls_used;
      break;
    case EventKind::hack_failed:
      break;
    case EventKind::employee_hired:
      if (s.pending_employee != e.card) throw std::logic_error("hired employee was not revealed");
      s.roster.push_back(RosterEntry{e.card, s.week});
      s.resources.money += e.money;
      s.pending_employee = -1;
      s.employee_decided = true;
      break;
    case EventKind::employee_refused:
      if (s.pending_employee != e.card) throw std::logic_error("refused employee was not revealed");
      s.employee_cards.discard.push_back(e.card);
      s.pending_employee = -1;
      s.employee_decided = true;
      break;
    case EventKind::employee_fired: {
      const auto slot = static_cast<std::size_t>(e.value);
      if (slot >= s.roster.size() || s.roster[slot].card != e.card) throw std::logic_error("fired employee not on roster");
      s.roster.erase(s.roster.begin() + static_cast<std::ptrdiff_t>(slot));
      s.employee_cards.discard.push_back(e.card);
      break;
    }
    case EventKind::game_ended:
      s.outcome = check_outcome(s);
      if (s.outcome.status == OutcomeStatus::won) s.outcome.winner = 0;
      s.phase = Phase::ended;
      break;
    default:
      throw std::logic_error("event kind does not apply to The Game of Growth");
  }
  s.events.push_back(e);
}

}  // namespace growthlab::gog
