#include "growthlab/growthopoly/engine.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "growthlab/core/errors.hpp"
#include "growthlab/pack/loader.hpp"
#include "growthlab/pack/validator.hpp"

namespace growthlab::growthopoly {

using pack::ContentPack;
using pack::ProbSolveKind;
using pack::SpaceKind;

namespace {

constexpr std::array<std::string_view, 8> kPhaseNames = {
    "awaiting_roll", "slush_roll", "skill_offer", "trade_fair_offer",
    "problem_pending", "trade_pending", "turn_over", "ended",
};

constexpr std::array<std::string_view, 9> kMoveNames = {
    "roll_and_move",  "begin_study",   "decline_study", "buy_followers", "decline_trade_fair",
    "play_solution",  "propose_trade", "respond_trade", "end_turn",
};

// Emits events for one move, applying each to the state as it is produced.
class Transition {
 public:
  explicit Transition(GrowthopolyState& state) : s_(state), start_(state.events.size()) {}

  std::size_t appended() const { return s_.events.size() - start_; }
  bool over() const { return s_.outcome.finished(); }
  const ContentPack& pack() const { return *s_.pack; }

  Event& base(EventKind kind, int actor = -1) {
    scratch_ = Event{};
    scratch_.kind = kind;
    scratch_.turn = s_.turn_number;
    scratch_.actor = actor;
    return scratch_;
  }

  void emit() {
    scratch_.sequence = s_.events.size() + 1;
    apply_event(s_, scratch_);
  }

  void set_phase(Phase phase) {
    if (over() || s_.phase == phase) return;
    auto& e = base(EventKind::phase_changed);
    e.detail = std::string(to_string(phase));
    emit();
  }

  // Credits followers and ends the game the instant the threshold is reached.
  void gain_followers(int player, Followers amount, std::string_view source, int card = -1, int space = -1) {
    if (over() || amount <= 0) return;
    auto& e = base(EventKind::gained_followers, player);
    e.followers = amount;
    e.detail = std::string(source);
    e.card = card;
    e.space = space;
    emit();
    if (s_.players[player].resources.followers >= kWinFollowers) {
      auto& end = base(EventKind::game_ended, player);
      end.detail = "won";
      emit();
    }
  }

  void gain_money(int player, Money amount, std::string_view source, int card = -1) {
    if (over() || amount <= 0) return;
    auto& e = base(EventKind::gained_money, player);
    e.money = amount;
    e.detail = std::string(source);
    e.card = card;
    emit();
  }

  void pay(int player, Money amount, std::string_view reason, int space = -1) {
    if (over() || amount <= 0) return;
    auto& e = base(EventKind::paid, player);
    e.money = -amount;
    e.detail = std::string(reason);
    e.space = space;
    emit();
  }

  int roll(int player) {
    RngStream probe = s_.rng;
    const int value = roll_die(probe).value;
    auto& e = base(EventKind::die_rolled, player);
    e.value = value;
    emit();
    return value;
  }

  // Top card of a deck, reshuffling the discard pile into it when empty.
  // Returns -1 when both piles are empty.
  int draw(DeckKind kind, int player) {
    auto& deck = s_.deck(kind);
    if (deck.draw.empty()) {
      if (deck.discard.empty()) {
        auto& e = base(EventKind::deck_exhausted, player);
        e.deck = kind;
        emit();
        return -1;
      }
      std::vector<int> order = deck.discard;
      RngStream probe = s_.rng;
      const auto draws = shuffle_in_place(order, probe);
      auto& e = base(EventKind::deck_reshuffled, player);
      e.deck = kind;
      e.cards = std::move(order);
      e.value = static_cast<std::int64_t>(draws);
      emit();
    }
    const int card = s_.deck(kind).draw.front();
    auto& e = base(EventKind::card_drawn, player);
    e.deck = kind;
    e.card = card;
    emit();
    return card;
  }

  void discard(DeckKind kind, int card, int player) {
    auto& e = base(EventKind::card_discarded, player);
    e.deck = kind;
    e.card = card;
    emit();
  }

  GrowthopolyState& state() { return s_; }

 private:
  GrowthopolyState& s_;
  std::size_t start_;
  Event scratch_;
};

bool holds_counter(const GrowthopolyState& s, int player, const std::string& tag) {
  const auto& deck = s.pack->prob_solve_deck;
  return std::any_of(s.players[player].solutions.begin(), s.players[player].solutions.end(),
                     [&](int card) { return deck[card].counters(tag); });
}

bool may_propose(const GrowthopolyState& s) {
  return s.trades_proposed < s.pack->rules.max_trade_proposals_per_turn;
}

void append_proposals(const GrowthopolyState& s, std::vector<Move>& out) {
  if (!may_propose(s)) return;
  const int me = s.current_player;
  const auto& mine = s.players[me];
  const auto& steps = s.pack->rules.trade_money_steps;
  const auto tags = s.pack->problem_tags();
  for (int other = 0; other < static_cast<int>(s.players.size()); ++other) {
    if (other == me) continue;
    const auto& theirs = s.players[other];
    for (const int card : mine.solutions) {
      for (const Money step : steps) {
        if (theirs.resources.money < step) continue;
        Move m = Move::of(MoveKind::propose_trade);
        m.trade = Trade{other, card, 0, {}, step};
        out.push_back(std::move(m));
      }
      for (const auto& tag : tags) {
        Move m = Move::of(MoveKind::propose_trade);
        m.trade = Trade{other, card, 0, tag, 0};
        out.push_back(std::move(m));
      }
    }
    for (const Money step : steps) {
      if (mine.resources.money < step) continue;
      for (const auto& tag : tags) {
        Move m = Move::of(MoveKind::propose_trade);
        m.trade = Trade{other, -1, step, tag, 0};
        out.push_back(std::move(m));
      }
    }
  }
}

// Start-of-turn bookkeeping for `player`: study progress, Slush, or a roll.
void begin_turn(Transition& t, int player) {
  auto& s = t.state();
  auto& started = t.base(EventKind::turn_started, player);
  started.turn = s.turn_number + 1;
  t.emit();

  const auto& p = s.players[player];
  if (const auto space = p.studying()) {
    const int remaining = p.skills.at(*space).turns_remaining - 1;
    auto& e = t.base(EventKind::study_progressed, player);
    e.space = *space;
    e.value = remaining;
    t.emit();
    if (remaining == 0) {
      auto& learned = t.base(EventKind::skill_learned, player);
      learned.space = *space;
      t.emit();
      const auto& skill = *t.pack().board.spaces[*space].skill;
      t.gain_followers(player, follower_reward(skill.follower_reward, skill.category == p.specialty),
                       "skill_completion", -1, *space);
    }
    t.set_phase(Phase::turn_over);
  } else if (p.slush) {
    t.set_phase(Phase::slush_roll);
  } else {
    t.set_phase(Phase::awaiting_roll);
  }
}

void suffer_problem(Transition& t, int player);

void resolve_space(Transition& t, int player) {
  auto& s = t.state();
  const int space = s.players[player].position;
  const auto& def = t.pack().board.spaces[space];
  switch (def.kind) {
    case SpaceKind::skill: {
      const int owner = s.owner_of(space);
      if (owner >= 0) {
        if (s.players[owner].skills.at(space).learned()) {
          const auto& skill = *def.skill;
          t.gain_followers(owner, follower_reward(skill.follower_reward, skill.category == s.players[owner].specialty),
                           "ownership", -1, space);
        }
        t.set_phase(Phase::turn_over);
      } else if (s.players[player].resources.money >= def.skill->study_cost) {
        t.set_phase(Phase::skill_offer);
      } else {
        t.set_phase(Phase::turn_over);
      }
      return;
    }
    case SpaceKind::bonus: {
      const int card = t.draw(DeckKind::bonus, player);
      if (card >= 0) {
        const auto& bonus = t.pack().bonus_deck[card];
        t.discard(DeckKind::bonus, card, player);
        t.gain_money(player, bonus.money_delta, "bonus", card);
        t.gain_followers(player, bonus.follower_delta, "bonus", card);
        if (t.over()) return;
      }
      t.set_phase(Phase::turn_over);
      return;
    }
    case SpaceKind::trade_fair:
      t.set_phase(s.players[player].resources.money >= def.trade_fair->price ? Phase::trade_fair_offer
                                                                             : Phase::turn_over);
      return;
    case SpaceKind::prob_solve: {
      const int card = t.draw(DeckKind::prob_solve, player);
      if (card < 0) {
        t.set_phase(Phase::turn_over);
        return;
      }
      const auto& def_card = t.pack().prob_solve_deck[card];
      if (def_card.kind == ProbSolveKind::solution) {
        auto& e = t.base(EventKind::card_stored, player);
        e.deck = DeckKind::prob_solve;
        e.card = card;
        t.emit();
        t.set_phase(Phase::turn_over);
      } else if (holds_counter(s, player, def_card.tag) || may_propose(s)) {
        t.set_phase(Phase::problem_pending);
      } else {
        suffer_problem(t, player);
        t.set_phase(Phase::turn_over);
      }
      return;
    }
    case SpaceKind::slush: {
      auto& e = t.base(EventKind::slush_entered, player);
      e.value = kSlushTurns;
      e.space = space;
      t.emit();
      t.set_phase(Phase::turn_over);
      return;
    }
    case SpaceKind::start:
      t.set_phase(Phase::turn_over);
      return;
  }
}

// Problem penalties floor money and followers at zero; the shortfall is forgiven.
void suffer_problem(Transition& t, int player) {
  auto& s = t.state();
  const int card = s.held_card;
  const auto& problem = t.pack().prob_solve_deck[card];
  t.pay(player, std::min(s.players[player].resources.money, problem.money_penalty), "penalty");
  const Followers lost = std::min(s.players[player].resources.followers, problem.follower_penalty);
  if (lost > 0) {
    auto& e = t.base(EventKind::lost_followers, player);
    e.followers = -lost;
    e.card = card;
    t.emit();
  }
  t.discard(DeckKind::prob_solve, card, player);
}

void do_roll(Transition& t, int player) {
  auto& s = t.state();
  const int value = t.roll(player);
  const auto& board = t.pack().board;
  const int n = board.size();
  const int from = s.players[player].position;
  const int start = board.start_index();
  bool passed_start = false;
  for (int k = 1; k <= value; ++k) passed_start |= (from + k) % n == start;
  auto& moved = t.base(EventKind::moved, player);
  moved.space = (from + value) % n;
  moved.value = value;
  t.emit();
  if (passed_start) {
    const auto& reward = t.pack().rules.start_reward;
    t.gain_money(player, reward.money, "start_reward");
    t.gain_followers(player, reward.followers, "start_reward");
    if (t.over()) return;
  }
  resolve_space(t, player);
}

void do_slush_roll(Transition& t, int player) {
  auto& s = t.state();
  const int value = t.roll(player);
  const auto& rules = t.pack().rules;
  if (value >= rules.slush_success_threshold) {
    t.gain_followers(player, rules.slush_followers, "slush");
    if (t.over()) return;
    const int remaining = *s.players[player].slush - 1;
    if (remaining > 0) {
      auto& e = t.base(EventKind::slush_progressed, player);
      e.value = remaining;
      t.emit();
    } else {
      auto& e = t.base(EventKind::slush_left, player);
      e.detail = "max_turns";
      t.emit();
    }
  } else {
    auto& e = t.base(EventKind::slush_left, player);
    e.detail = "failed_roll";
    t.emit();
  }
  t.set_phase(Phase::turn_over);
}

void do_begin_study(Transition& t, int player, int space) {
  auto& s = t.state();
  const auto& skill = *t.pack().board.spaces[space].skill;
  const bool specialty = skill.category == s.players[player].specialty;
  t.pay(player, skill.study_cost, "study", space);
  const int turns = study_duration(skill.level, specialty);
  auto& e = t.base(EventKind::study_started, player);
  e.space = space;
  e.value = turns;
  t.emit();
  if (turns == 0) {
    auto& learned = t.base(EventKind::skill_learned, player);
    learned.space = space;
    t.emit();
    t.gain_followers(player, follower_reward(skill.follower_reward, specialty), "skill_completion", -1, space);
  }
  t.set_phase(Phase::turn_over);
}

void do_trade_response(Transition& t, const Move& move) {
  auto& s = t.state();
  const PendingTrade pending = *s.pending_trade;
  const int proposer = pending.proposer;
  const int other = pending.trade.counterparty;
  if (move.accept) {
    auto transfer = [&](int from, int to, int card) {
      auto& e = t.base(EventKind::card_transferred, from);
      e.counterparty = to;
      e.deck = DeckKind::prob_solve;
      e.card = card;
      t.emit();
    };
    auto money = [&](int from, int to, Money amount) {
      if (amount <= 0) return;
      t.pay(from, amount, "trade");
      t.gain_money(to, amount, "trade");
    };
    if (pending.trade.give_card >= 0) transfer(proposer, other, pending.trade.give_card);
    if (move.card >= 0) transfer(other, proposer, move.card);
    money(proposer, other, pending.trade.give_money);
    money(other, proposer, pending.trade.receive_money);
    auto& e = t.base(EventKind::trade_accepted, proposer);
    e.counterparty = other;
    e.card = move.card;
    t.emit();
  } else {
    auto& e = t.base(EventKind::trade_rejected, proposer);
    e.counterparty = other;
    t.emit();
  }
  t.set_phase(pending.resume_phase);
}

void do_end_turn(Transition& t, int player) {
  auto& s = t.state();
  if (s.phase == Phase::problem_pending) suffer_problem(t, player);
  t.base(EventKind::turn_ended, player);
  t.emit();
  begin_turn(t, (player + 1) % static_cast<int>(s.players.size()));
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

std::optional<int> PlayerState::studying() const {
  for (const auto& [space, record] : skills) {
    if (!record.learned()) return space;
  }
  return std::nullopt;
}

int GrowthopolyState::owner_of(int space) const {
  for (std::size_t i = 0; i < players.size(); ++i) {
    if (players[i].skills.count(space)) return static_cast<int>(i);
  }
  return -1;
}

DeckState& GrowthopolyState::deck(DeckKind kind) {
  if (kind == DeckKind::bonus) return bonus;
  if (kind == DeckKind::prob_solve) return prob_solve;
  throw std::invalid_argument("Growthopoly has no such deck");
}

const DeckState& GrowthopolyState::deck(DeckKind kind) const {
  return const_cast<GrowthopolyState&>(*this).deck(kind);
}

int study_duration(int level, bool is_specialty) { return std::max(0, level - (is_specialty ? 1 : 0)); }

Followers follower_reward(Followers base, bool is_specialty) { return is_specialty ? 2 * base : base; }

GrowthopolyState new_game(pack::PackPtr pack, const std::vector<PlayerSpec>& players, std::uint64_t seed) {
  return new_game(std::move(pack), players, derive_stream(seed, 0));
}

GrowthopolyState new_game(pack::PackPtr pack, const std::vector<PlayerSpec>& players, RngStream rng) {
  if (!pack || pack->game != pack::Game::growthopoly || pack::has_errors(pack::validate_pack(*pack))) {
    throw GameError("invalid_pack", "pack is not a valid Growthopoly pack");
  }
  if (players.size() < static_cast<std::size_t>(kMinPlayers)) {
    throw GameError("needs_opponents", "Growthopoly needs at least 2 players");
  }
  if (players.size() > static_cast<std::size_t>(kMaxPlayers)) {
    throw GameError("too_many_players", "Growthopoly seats at most 8 players");
  }
  std::set<std::string> ids;
  for (const auto& spec : players) {
    if (spec.id.empty() || !ids.insert(spec.id).second) {
      throw GameError("bad_player_id", "player ids must be non-empty and unique");
    }
  }

  GrowthopolyState s;
  s.pack_digest = pack::pack_digest(*pack);
  s.pack = std::move(pack);
  s.rng = rng;
  for (int i = 0; i < static_cast<int>(s.pack->bonus_deck.size()); ++i) s.bonus.draw.push_back(i);
  for (int i = 0; i < static_cast<int>(s.pack->prob_solve_deck.size()); ++i) s.prob_solve.draw.push_back(i);
  shuffle_in_place(s.bonus.draw, s.rng);
  shuffle_in_place(s.prob_solve.draw, s.rng);

  const int start = s.pack->board.start_index();
  for (const auto& spec : players) {
    PlayerState p;
    p.id = spec.id;
    p.specialty = spec.specialty;
    p.position = start;
    p.resources = {s.pack->rules.starting_money, s.pack->rules.starting_followers};
    s.players.push_back(std::move(p));
  }
  s.current_player = 0;
  s.turn_number = 1;
  s.phase = Phase::awaiting_roll;

  Event started;
  started.sequence = 1;
  started.kind = EventKind::game_started;
  started.turn = 1;
  started.value = static_cast<std::int64_t>(players.size());
  started.detail = s.pack_digest;
  s.events.push_back(std::move(started));
  return s;
}

int acting_player(const GrowthopolyState& state) {
  if (state.phase == Phase::trade_pending && state.pending_trade) return state.pending_trade->trade.counterparty;
  return state.current_player;
}

std::vector<Move> legal_moves(const GrowthopolyState& s) {
  std::vector<Move> out;
  if (s.outcome.finished()) return out;
  const auto& me = s.players[s.current_player];
  const auto& pack = *s.pack;
  switch (s.phase) {
    case Phase::awaiting_roll:
      out.push_back(Move::of(MoveKind::roll_and_move));
      append_proposals(s, out);
      break;
    case Phase::slush_roll:
      out.push_back(Move::of(MoveKind::roll_and_move));
      break;
    case Phase::skill_offer: {
      const auto& skill = *pack.board.spaces[me.position].skill;
      if (me.resources.money >= skill.study_cost) {
        Move m = Move::of(MoveKind::begin_study);
        m.space = me.position;
        out.push_back(m);
      }
      out.push_back(Move::of(MoveKind::decline_study));
      break;
    }
    case Phase::trade_fair_offer: {
      const auto& fair = *pack.board.spaces[me.position].trade_fair;
      if (me.resources.money >= fair.price) {
        Move m = Move::of(MoveKind::buy_followers);
        m.space = me.position;
        out.push_back(m);
      }
      out.push_back(Move::of(MoveKind::decline_trade_fair));
      break;
    }
    case Phase::problem_pending: {
      const auto& tag = pack.prob_solve_deck[s.held_card].tag;
      for (const int card : me.solutions) {
        if (!pack.prob_solve_deck[card].counters(tag)) continue;
        Move m = Move::of(MoveKind::play_solution);
        m.card = card;
        m.problem = s.held_card;
        out.push_back(m);
      }
      out.push_back(Move::of(MoveKind::end_turn));
      append_proposals(s, out);
      break;
    }
    case Phase::trade_pending: {
      const auto& trade = s.pending_trade->trade;
      const auto& responder = s.players[trade.counterparty];
      if (trade.want_tag.empty()) {
        Move m = Move::of(MoveKind::respond_trade);
        m.accept = true;
        out.push_back(m);
      } else {
        for (const int card : responder.solutions) {
          if (!pack.prob_solve_deck[card].counters(trade.want_tag)) continue;
          Move m = Move::of(MoveKind::respond_trade);
          m.accept = true;
          m.card = card;
          out.push_back(m);
        }
      }
      out.push_back(Move::of(MoveKind::respond_trade));
      break;
    }
    case Phase::turn_over:
      out.push_back(Move::of(MoveKind::end_turn));
      break;
    case Phase::ended:
      break;
  }
  return out;
}

std::size_t apply_move_in_place(GrowthopolyState& state, const Move& move) {
  if (state.outcome.finished()) throw IllegalMove("the game is over");
  const auto legal = legal_moves(state);
  if (std::find(legal.begin(), legal.end(), move) == legal.end()) {
    throw IllegalMove("move '" + std::string(to_string(move.kind)) + "' is not legal in phase '" +
                      std::string(to_string(state.phase)) + "'");
  }

  Transition t(state);
  const int player = state.current_player;
  switch (move.kind) {
    case MoveKind::roll_and_move:
      if (state.phase == Phase::slush_roll) {
        do_slush_roll(t, player);
      } else {
        do_roll(t, player);
      }
      break;
    case MoveKind::begin_study:
      do_begin_study(t, player, move.space);
      break;
    case MoveKind::decline_study:
    case MoveKind::decline_trade_fair:
      t.set_phase(Phase::turn_over);
      break;
    case MoveKind::buy_followers: {
      const auto& fair = *t.pack().board.spaces[move.space].trade_fair;
      t.pay(player, fair.price, "trade_fair", move.space);
      t.gain_followers(player, fair.followers_granted, "trade_fair", -1, move.space);
      t.set_phase(Phase::turn_over);
      break;
    }
    case MoveKind::play_solution: {
      auto& spent = t.base(EventKind::solution_spent, player);
      spent.deck = DeckKind::prob_solve;
      spent.card = move.card;
      t.emit();
      t.discard(DeckKind::prob_solve, move.problem, player);
      t.set_phase(Phase::turn_over);
      break;
    }
    case MoveKind::propose_trade: {
      auto& e = t.base(EventKind::trade_proposed, player);
      e.counterparty = move.trade.counterparty;
      e.card = move.trade.give_card;
      e.money = move.trade.give_money;
      e.value = move.trade.receive_money;
      e.detail = move.trade.want_tag;
      t.emit();
      t.set_phase(Phase::trade_pending);
      break;
    }
    case MoveKind::respond_trade:
      do_trade_response(t, move);
      break;
    case MoveKind::end_turn:
      do_end_turn(t, player);
      break;
  }
  return t.appended();
}

Applied apply_move(const GrowthopolyState& state, const Move& move) {
  Applied out{state, {}};
  const auto before = out.state.events.size();
  apply_move_in_place(out.state, move);
  out.events.assign(out.state.events.begin() + static_cast<std::ptrdiff_t>(before), out.state.events.end());
  return out;
}

GrowthopolyState replay(GrowthopolyState initial, std::span<const Event> events) {
  for (const auto& event : events) {
    if (event.sequence <= initial.events.size()) continue;
    apply_event(initial, event);
  }
  return initial;
}

}  // namespace growthlab::growthopoly
