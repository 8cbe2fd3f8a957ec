#include "growthlab/service/view.hpp"

#include "growthlab/gog/engine.hpp"
#include "growthlab/gog/serialize.hpp"
#include "growthlab/growthopoly/engine.hpp"
#include "growthlab/growthopoly/serialize.hpp"

namespace growthlab::service {

using nlohmann::json;

namespace {

void hide_draw_piles(json& decks) {
  for (auto& [name, deck] : decks.items()) {
    deck["draw_count"] = deck["draw"].size();
    deck.erase("draw");
  }
}

bool is_solution(const pack::ContentPack& pack, const Event& e) {
  return e.deck == DeckKind::prob_solve && e.card >= 0 &&
         e.card < static_cast<int>(pack.prob_solve_deck.size()) &&
         pack.prob_solve_deck[static_cast<std::size_t>(e.card)].kind == pack::ProbSolveKind::solution;
}

std::string signed_amount(std::int64_t v) { return (v >= 0 ? "+" : "") + std::to_string(v); }

}  // namespace

json seat_view(const growthopoly::GrowthopolyState& s, int seat) {
  json doc = growthopoly::to_canonical_json(s, false);
  doc.erase("rng");
  hide_draw_piles(doc["decks"]);
  for (std::size_t i = 0; i < doc["players"].size(); ++i) {
    if (static_cast<int>(i) == seat) continue;
    auto& player = doc["players"][i];
    player["solution_count"] = player["solutions"].size();
    player.erase("solutions");
  }
  if (s.pending_trade) {
    const auto& p = *s.pending_trade;
    if (seat != p.proposer && seat != p.trade.counterparty && p.trade.give_card >= 0) {
      doc["pending_trade"]["give_card"] = "hidden";
    }
  }
  if (s.held_card >= 0 && s.pack->prob_solve_deck[static_cast<std::size_t>(s.held_card)].kind ==
                              pack::ProbSolveKind::solution && seat != s.current_player) {
    doc["held_card"] = "hidden";
  }
  doc["seat"] = seat;
  doc["acting_seat"] = s.outcome.finished() ? -1 : growthopoly::acting_player(s);
  return doc;
}

json seat_view(const gog::GogState& s, int seat) {
  json doc = gog::to_canonical_json(s, false);
  doc.erase("rng");
  hide_draw_piles(doc["decks"]);
  doc["seat"] = seat;
  doc["acting_seat"] = s.outcome.finished() ? -1 : 0;
  doc["payroll"] = gog::payroll(s);
  doc["rerolls_left"] = gog::rerolls_left(s);
  return doc;
}

json redact_event(const Event& e, const pack::ContentPack& pack, int seat) {
  json doc = to_json(e);
  switch (e.kind) {
    case EventKind::deck_reshuffled:
      doc.erase("cards");
      break;
    case EventKind::card_drawn:
    case EventKind::card_stored:
      if (is_solution(pack, e) && e.actor != seat) doc.erase("card");
      break;
    case EventKind::card_transferred:
    case EventKind::trade_proposed:
      if (seat != e.actor && seat != e.counterparty) doc.erase("card");
      break;
    default:
      break;
  }
  return doc;
}

std::string describe_move(const growthopoly::GrowthopolyState& s, const growthopoly::Move& m) {
  using growthopoly::MoveKind;
  const auto& pack = *s.pack;
  switch (m.kind) {
    case MoveKind::roll_and_move:
      return s.phase == growthopoly::Phase::slush_roll ? "roll to stay in the Slush" : "roll and move";
    case MoveKind::begin_study: {
      const auto& space = pack.board.spaces[static_cast<std::size_t>(m.space)];
      return "study " + space.name + " for $" + std::to_string(space.skill->study_cost);
    }
    case MoveKind::decline_study:
      return "decline to study";
    case MoveKind::buy_followers: {
      const auto& fair = *pack.board.spaces[static_cast<std::size_t>(m.space)].trade_fair;
      return "buy " + std::to_string(fair.followers_granted) + " followers for $" + std::to_string(fair.price);
    }
    case MoveKind::decline_trade_fair:
      return "leave the trade fair";
    case MoveKind::play_solution:
      return "play " + pack.prob_solve_deck[static_cast<std::size_t>(m.card)].label + " against " +
             pack.prob_solve_deck[static_cast<std::size_t>(m.problem)].label;
    case MoveKind::propose_trade: {
      const auto& t = m.trade;
      std::string out = "offer " + s.players[static_cast<std::size_t>(t.counterparty)].id + " ";
      out += t.give_card >= 0 ? pack.prob_solve_deck[static_cast<std::size_t>(t.give_card)].label
                              : "$" + std::to_string(t.give_money);
      out += " for ";
      out += t.want_tag.empty() ? "$" + std::to_string(t.receive_money) : "a solution to " + t.want_tag;
      return out;
    }
    case MoveKind::respond_trade:
      if (!m.accept) return "reject the trade";
      return m.card >= 0 ? "accept, handing over " + pack.prob_solve_deck[static_cast<std::size_t>(m.card)].label
                         : "accept the trade";
    case MoveKind::end_turn:
      return s.phase == growthopoly::Phase::problem_pending ? "accept the penalty and end the turn" : "end turn";
  }
  return std::string(to_string(m.kind));
}

std::string describe_move(const gog::GogState& s, const gog::Move& m) {
  using gog::MoveKind;
  const auto& pack = *s.pack;
  switch (m.kind) {
    case MoveKind::draw_event:
      return "pay salaries and draw this week's event";
    case MoveKind::play_hack: {
      const int card = s.hand[static_cast<std::size_t>(m.index)];
      const auto& hack = pack.hack_deck[static_cast<std::size_t>(card)];
      return "play " + hack.label + " ($" + std::to_string(gog::effective_hack_cost(s, card)) + ", " +
             std::to_string(hack.success_threshold) + "+ for " +
             std::to_string(gog::follower_multiplier(s).scale_floor(hack.follower_gain)) + " followers)";
    }
    case MoveKind::skip_remaining_hacks:
      return "done with hacks";
    case MoveKind::reveal_employee:
      return "reveal a job candidate";
    case MoveKind::hire: {
      const auto& e = pack.employee_deck[static_cast<std::size_t>(s.pending_employee)];
      return "hire " + e.label + " for $" + std::to_string(gog::effective_hire_cost(s, s.pending_employee)) +
             " (salary $" + std::to_string(e.salary) + ")";
    }
    case MoveKind::refuse:
      return "pass on the candidate";
    case MoveKind::fire:
      return "fire " + pack.employee_deck[static_cast<std::size_t>(s.roster[static_cast<std::size_t>(m.index)].card)].label;
    case MoveKind::end_turn:
      return "end the week";
  }
  return std::string(to_string(m.kind));
}

std::string describe_event(const Event& e, const pack::ContentPack& pack, int seat) {
  const std::string who = e.actor >= 0 && pack.game == pack::Game::growthopoly ? "p" + std::to_string(e.actor) + " " : "";
  auto card_label = [&]() -> std::string {
    if (e.card < 0) return "?";
    const auto c = static_cast<std::size_t>(e.card);
    switch (e.deck) {
      case DeckKind::bonus: return pack.bonus_deck[c].label;
      case DeckKind::prob_solve: return pack.prob_solve_deck[c].label;
      case DeckKind::event: return pack.event_deck[c].label;
      case DeckKind::hack: return pack.hack_deck[c].label;
      case DeckKind::employee: return pack.employee_deck[c].label;
      case DeckKind::none: break;
    }
    return "?";
  };
  switch (e.kind) {
    case EventKind::die_rolled: return who + "rolled " + std::to_string(e.value);
    case EventKind::moved: return who + "moved to " + pack.board.spaces[static_cast<std::size_t>(e.space)].name;
    case EventKind::paid:
    case EventKind::gained_money: return who + "money " + signed_amount(e.money);
    case EventKind::gained_followers:
    case EventKind::lost_followers:
    case EventKind::hack_succeeded:
      return who + (e.kind == EventKind::hack_succeeded ? "hack succeeded, followers " : "followers ") +
             signed_amount(e.followers);
    case EventKind::hack_failed: return "hack failed";
    case EventKind::card_drawn:
      if (is_solution(pack, e) && e.actor != seat) return who + "drew a solution";
      return who + "drew " + card_label();
    case EventKind::card_stored:
      return who + (e.actor == seat ? "stored " + card_label() : "stored a solution");
    case EventKind::turn_started: return "turn " + std::to_string(e.turn) + " begins";
    case EventKind::game_ended: return "game over: " + e.detail;
    case EventKind::phase_changed: return "phase " + e.detail;
    case EventKind::payroll_failed: return "payroll of $" + std::to_string(e.money) + " could not be met";
    default: return who + std::string(to_string(e.kind));
  }
}

}  // namespace growthlab::service
