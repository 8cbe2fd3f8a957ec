#include "growthlab/gog/engine.hpp"

#include <algorithm>
#include <array>

#include "growthlab/core/errors.hpp"
#include "growthlab/pack/loader.hpp"
#include "growthlab/pack/validator.hpp"

namespace growthlab::gog {

using pack::AbilityKind;
using pack::ContentPack;

namespace {

constexpr std::array<std::string_view, 5> kPhaseNames = {"upkeep", "event", "hacks", "employee", "ended"};
constexpr std::array<std::string_view, 8> kMoveNames = {
    "draw_event", "play_hack", "skip_remaining_hacks", "reveal_employee", "hire", "refuse", "fire", "end_turn",
};

class Transition {
 public:
  explicit Transition(GogState& state) : s_(state), start_(state.events.size()) {}

  std::size_t appended() const { return s_.events.size() - start_; }
  bool over() const { return s_.outcome.finished(); }
  const ContentPack& pack() const { return *s_.pack; }
  GogState& state() { return s_; }

  Event& base(EventKind kind) {
    scratch_ = Event{};
    scratch_.kind = kind;
    scratch_.turn = s_.week;
    return scratch_;
  }

  void emit() {
    scratch_.sequence = s_.events.size() + 1;
    apply_event(s_, scratch_);
  }

  void set_phase(Phase phase) {
    if (over() || s_.phase == phase) return;
    base(EventKind::phase_changed).detail = std::string(to_string(phase));
    emit();
  }

  void end_game(std::string_view reason) {
    base(EventKind::game_ended).detail = std::string(reason);
    emit();
  }

  void gain_followers(Followers amount, std::string_view source, int card) {
    if (over() || amount <= 0) return;
    auto& e = base(EventKind::gained_followers);
    e.followers = amount;
    e.detail = std::string(source);
    e.card = card;
    emit();
    if (s_.resources.followers >= kWinFollowers) end_game("won");
  }

  int roll() {
    RngStream probe = s_.rng;
    const int value = roll_die(probe).value;
    base(EventKind::die_rolled).value = value;
    emit();
    return value;
  }

  int draw(DeckKind kind) {
    auto& deck = s_.deck(kind);
    if (deck.draw.empty()) {
      if (deck.discard.empty()) {
        base(EventKind::deck_exhausted).deck = kind;
        emit();
        return -1;
      }
      std::vector<int> order = deck.discard;
      RngStream probe = s_.rng;
      const auto draws = shuffle_in_place(order, probe);
      auto& e = base(EventKind::deck_reshuffled);
      e.deck = kind;
      e.cards = std::move(order);
      e.value = static_cast<std::int64_t>(draws);
      emit();
    }
    const int card = s_.deck(kind).draw.front();
    auto& e = base(EventKind::card_drawn);
    e.deck = kind;
    e.card = card;
    emit();
    return card;
  }

  void discard(DeckKind kind, int card) {
    auto& e = base(EventKind::card_discarded);
    e.deck = kind;
    e.card = card;
    emit();
  }

 private:
  GogState& s_;
  std::size_t start_;
  Event scratch_;
};

// Salaries first, then the week's event, then the hack hand.
void do_draw_event(Transition& t) {
  auto& s = t.state();
  if (s.waive_next_upkeep) {
    t.base(EventKind::salaries_waived);
    t.emit();
  } else {
    const Money due = payroll(s);
    if (due > s.resources.money) {
      t.base(EventKind::payroll_failed).money = due;
      t.emit();
      t.end_game("bankrupt");
      return;
    }
    for (std::size_t slot = 0; slot < s.roster.size(); ++slot) {
      const int card = s.roster[slot].card;
      const Money salary = t.pack().employee_deck[card].salary;
      if (salary <= 0) continue;
      auto& e = t.base(EventKind::paid);
      e.money = -salary;
      e.card = card;
      e.value = static_cast<std::int64_t>(slot);
      e.detail = "salary";
      t.emit();
    }
  }

  t.set_phase(Phase::event);
  const int event_card = t.draw(DeckKind::event);
  if (event_card >= 0) {
    const auto& def = t.pack().event_deck[event_card];
    if (def.money_grant > 0) {
      auto& e = t.base(EventKind::gained_money);
      e.money = def.money_grant;
      e.card = event_card;
      e.detail = "event";
      t.emit();
    }
    if (def.salaries_waived) {
      t.base(EventKind::upkeep_waiver_granted).card = event_card;
      t.emit();
    }
  }

  t.set_phase(Phase::hacks);
  for (int i = 0; i < kHandSize; ++i) t.draw(DeckKind::hack);
}

void do_play_hack(Transition& t, int slot) {
  auto& s = t.state();
  const int card = s.hand[static_cast<std::size_t>(slot)];
  const auto& def = t.pack().hack_deck[card];
  auto& played = t.base(EventKind::hack_played);
  played.card = card;
  played.value = slot;
  played.money = -effective_hack_cost(s, card);
  t.emit();

  bool success = t.roll() >= def.success_threshold;
  if (!success && rerolls_left(s) > 0) {
    t.base(EventKind::reroll_used).card = card;
    t.emit();
    success = t.roll() >= def.success_threshold;
  }
  if (success) {
    auto& e = t.base(EventKind::hack_succeeded);
    e.card = card;
    e.followers = follower_multiplier(s).scale_floor(def.follower_gain);
    e.detail = "hack";
    t.emit();
    if (s.resources.followers >= kWinFollowers) t.end_game("won");
  } else {
    t.base(EventKind::hack_failed).card = card;
    t.emit();
  }
}

void do_skip_hacks(Transition& t) {
  auto& s = t.state();
  const std::vector<int> leftover = s.hand;
  const std::vector<int> used = s.played;
  for (const int card : leftover) t.discard(DeckKind::hack, card);
  for (const int card : used) t.discard(DeckKind::hack, card);
  t.set_phase(Phase::employee);
}

void do_end_turn(Transition& t) {
  auto& s = t.state();
  const Ratio multiplier = follower_multiplier(s);
  const std::vector<RosterEntry> roster = s.roster;
  for (const auto& entry : roster) {
    const auto& ability = t.pack().employee_deck[entry.card].ability;
    if (ability.kind != AbilityKind::passive_followers) continue;
    t.gain_followers(multiplier.scale_floor(ability.amount), "employee", entry.card);
    if (t.over()) return;
  }
  if (s.active_event >= 0) t.discard(DeckKind::event, s.active_event);
  t.base(EventKind::turn_ended);
  t.emit();
  if (s.week >= kTurns) {
    t.end_game("turns_exhausted");
    return;
  }
  t.base(EventKind::turn_started).turn = s.week + 1;
  t.emit();
  t.set_phase(Phase::upkeep);
}

}  // namespace

std::string_view to_string(Phase phase) noexcept { return kPhaseNames[static_cast<std::size_t>(phase)]; }

std::optional<Phase> phase_from_string(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kPhaseNames.size(); ++i) {
    if (kPhaseNames[i] == name) return static_cast<Phase>(i);
  }
  return std::nullopt;
}

std::string_view to_string(MoveKind kind) noexcept { return kMoveNames[static_cast<std::size_t>(kind)]; }

std::optional<MoveKind> move_kind_from_string(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kMoveNames.size(); ++i) {
    if (kMoveNames[i] == name) return static_cast<MoveKind>(i);
  }
  return std::nullopt;
}

DeckState& GogState::deck(DeckKind kind) {
  switch (kind) {
    case DeckKind::event: return event_cards;
    case DeckKind::hack: return hack_cards;
    case DeckKind::employee: return employee_cards;
    default: throw std::invalid_argument("The Game of Growth has no such deck");
  }
}

const DeckState& GogState::deck(DeckKind kind) const { return const_cast<GogState&>(*this).deck(kind); }

Ratio hack_success_probability(const pack::HackCardDef& card) {
  return Ratio{7 - card.success_threshold, 6}.normalized();
}

GogState new_game(pack::PackPtr pack, StartupType startup_type, std::uint64_t seed) {
  return new_game(std::move(pack), startup_type, derive_stream(seed, 0));
}

GogState new_game(pack::PackPtr pack, StartupType startup_type, RngStream rng) {
  if (!pack || pack->game != pack::Game::game_of_growth || pack::has_errors(pack::validate_pack(*pack))) {
    throw GameError("invalid_pack", "pack is not a valid Game of Growth pack");
  }
  if (!pack->startup(startup_type)) {
    throw GameError("unknown_startup_type", "pack does not define this startup type");
  }
  GogState s;
  s.pack_digest = pack::pack_digest(*pack);
  s.pack = std::move(pack);
  s.startup_type = startup_type;
  s.rng = rng;
  s.event_cards.draw = s.pack->deck_for(startup_type, DeckKind::event);
  s.hack_cards.draw = s.pack->deck_for(startup_type, DeckKind::hack);
  s.employee_cards.draw = s.pack->deck_for(startup_type, DeckKind::employee);
  shuffle_in_place(s.event_cards.draw, s.rng);
  shuffle_in_place(s.hack_cards.draw, s.rng);
  shuffle_in_place(s.employee_cards.draw, s.rng);
  s.resources = {kStartingMoney, 0};
  s.week = 1;
  s.phase = Phase::upkeep;

  Event started;
  started.sequence = 1;
  started.kind = EventKind::game_started;
  started.turn = 1;
  started.detail = s.pack_digest;
  s.events.push_back(std::move(started));
  return s;
}

Money effective_hack_cost(const GogState& s, int hack_card) {
  int discount = 0;
  for (const auto& entry : s.roster) {
    const auto& ability = s.pack->employee_deck[entry.card].ability;
    if (ability.kind == AbilityKind::hack_discount) discount += ability.amount;
  }
  discount = std::min(discount, 100);
  Ratio multiplier = s.active_event >= 0 ? s.pack->event_deck[s.active_event].hack_cost_multiplier : Ratio::one();
  const Ratio combined{multiplier.num * (100 - discount), multiplier.den * 100};
  return combined.scale_floor(s.pack->hack_deck[hack_card].cost);
}

Money effective_hire_cost(const GogState& s, int employee_card) {
  const Ratio multiplier =
      s.active_event >= 0 ? s.pack->event_deck[s.active_event].hiring_cost_multiplier : Ratio::one();
  return multiplier.scale_floor(s.pack->employee_deck[employee_card].hire_cost);
}

Ratio follower_multiplier(const GogState& s) {
  return s.active_event >= 0 ? s.pack->event_deck[s.active_event].follower_gain_multiplier : Ratio::one();
}

int rerolls_left(const GogState& s) {
  int total = 0;
  for (const auto& entry : s.roster) {
    total += s.pack->employee_deck[entry.card].ability.kind == AbilityKind::reroll_once_per_turn;
  }
  return std::max(0, total - s.rerolls_used);
}

Money payroll(const GogState& s) {
  Money total = 0;
  for (const auto& entry : s.roster) total += s.pack->employee_deck[entry.card].salary;
  return total;
}

GameOutcome check_outcome(const GogState& s) {
  GameOutcome out;
  if (s.resources.followers >= kWinFollowers) {
    out.status = OutcomeStatus::won;
    out.turns_elapsed = s.week;
  } else if (s.bankrupt) {
    out.status = OutcomeStatus::lost;
    out.loss_reason = LossReason::bankrupt;
    out.turns_elapsed = s.weeks_completed;
  } else if (s.weeks_completed >= kTurns) {
    out.status = OutcomeStatus::lost;
    out.loss_reason = LossReason::turns_exhausted;
    out.turns_elapsed = s.weeks_completed;
  } else {
    out.turns_elapsed = s.weeks_completed;
  }
  return out;
}

std::vector<Move> legal_moves(const GogState& s) {
  std::vector<Move> out;
  if (s.outcome.finished()) return out;
  switch (s.phase) {
    case Phase::upkeep:
      out.push_back(Move::of(MoveKind::draw_event));
      break;
    case Phase::hacks:
      for (int i = 0; i < static_cast<int>(s.hand.size()); ++i) {
        if (effective_hack_cost(s, s.hand[static_cast<std::size_t>(i)]) <= s.resources.money) {
          out.push_back(Move::of(MoveKind::play_hack, i));
        }
      }
      out.push_back(Move::of(MoveKind::skip_remaining_hacks));
      break;
    case Phase::employee:
      if (!s.employee_revealed) {
        out.push_back(Move::of(MoveKind::reveal_employee));
      } else if (!s.employee_decided) {
        if (effective_hire_cost(s, s.pending_employee) <= s.resources.money) {
          out.push_back(Move::of(MoveKind::hire));
        }
        out.push_back(Move::of(MoveKind::refuse));
      } else {
        out.push_back(Move::of(MoveKind::end_turn));
      }
      for (int i = 0; i < static_cast<int>(s.roster.size()); ++i) out.push_back(Move::of(MoveKind::fire, i));
      break;
    case Phase::event:
    case Phase::ended:
      break;
  }
  return out;
}

std::size_t apply_move_in_place(GogState& state, const Move& move) {
  if (state.outcome.finished()) throw IllegalMove("the game is over");
  const auto legal = legal_moves(state);
  if (std::find(legal.begin(), legal.end(), move) == legal.end()) {
    throw IllegalMove("move '" + std::string(to_string(move.kind)) + "' is not legal in phase '" +
                      std::string(to_string(state.phase)) + "'");
  }
  Transition t(state);
  switch (move.kind) {
    case MoveKind::draw_event:
      do_draw_event(t);
      break;
    case MoveKind::play_hack:
      do_play_hack(t, move.index);
      break;
    case MoveKind::skip_remaining_hacks:
      do_skip_hacks(t);
      break;
    case MoveKind::reveal_employee:
      t.draw(DeckKind::employee);
      break;
    case MoveKind::hire: {
      auto& e = t.base(EventKind::employee_hired);
      e.card = state.pending_employee;
      e.money = -effective_hire_cost(state, state.pending_employee);
      t.emit();
      break;
    }
    case MoveKind::refuse:
      t.base(EventKind::employee_refused).card = state.pending_employee;
      t.emit();
      break;
    case MoveKind::fire: {
      auto& e = t.base(EventKind::employee_fired);
      e.card = state.roster[static_cast<std::size_t>(move.index)].card;
      e.value = move.index;
      t.emit();
      break;
    }
    case MoveKind::end_turn:
      do_end_turn(t);
      break;
  }
  return t.appended();
}

Applied apply_move(const GogState& state, const Move& move) {
  Applied out{state, {}};
  const auto before = out.state.events.size();
  apply_move_in_place(out.state, move);
  out.events.assign(out.state.events.begin() + static_cast<std::ptrdiff_t>(before), out.state.events.end());
  return out;
}

GogState replay(GogState initial, std::span<const Event> events) {
  for (const auto& event : events) {
    if (event.sequence <= initial.events.size()) continue;
    apply_event(initial, event);
  }
  return initial;
}

}  // namespace growthlab::gog
