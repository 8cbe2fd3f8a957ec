#include "growthlab/sim/batch.hpp"

#include <omp.h>

#include "growthlab/core/errors.hpp"
#include "growthlab/pack/validator.hpp"
#include "growthlab/sim/run_game.hpp"

namespace growthlab::sim {

namespace {

struct GameResult {
  bool aborted = false;
  std::string diagnostic;
  std::string outcome;  // won, bankrupt, turns_exhausted, unfinished
  int winner = -1;
  int turns = 0;
  bool finished = false;
  Money money = 0;
  Followers followers = 0;
  std::vector<CardStats> cards;
  std::vector<TrajectoryPoint> trajectory;
};

std::vector<CardStats> empty_card_stats(const SimConfig& c) {
  std::vector<CardStats> out;
  const auto& p = *c.pack;
  if (c.game == pack::Game::game_of_growth) {
    for (int i = 0; i < static_cast<int>(p.hack_deck.size()); ++i) {
      out.push_back({DeckKind::hack, i, p.hack_deck[static_cast<std::size_t>(i)].id});
    }
  } else {
    for (int i = 0; i < static_cast<int>(p.bonus_deck.size()); ++i) {
      out.push_back({DeckKind::bonus, i, p.bonus_deck[static_cast<std::size_t>(i)].id});
    }
    for (int i = 0; i < static_cast<int>(p.prob_solve_deck.size()); ++i) {
      out.push_back({DeckKind::prob_solve, i, p.prob_solve_deck[static_cast<std::size_t>(i)].id});
    }
  }
  return out;
}

std::string outcome_label(const GameOutcome& o) {
  if (o.status == OutcomeStatus::won) return "won";
  if (o.status == OutcomeStatus::lost && o.loss_reason) return std::string(to_string(*o.loss_reason));
  return "unfinished";
}

// Card tallies and seat-0 trajectory straight from the event log.
void tally(const SimConfig& c, const std::vector<Event>& events, GameResult& r) {
  r.cards = empty_card_stats(c);
  const std::size_t bonus_count = c.pack->bonus_deck.size();
  auto slot = [&](DeckKind deck, int card) -> CardStats* {
    if (card < 0) return nullptr;
    if (c.game == pack::Game::game_of_growth) return deck == DeckKind::hack ? &r.cards[static_cast<std::size_t>(card)] : nullptr;
    if (deck == DeckKind::bonus) return &r.cards[static_cast<std::size_t>(card)];
    if (deck == DeckKind::prob_solve) return &r.cards[bonus_count + static_cast<std::size_t>(card)];
    return nullptr;
  };
  Money money = c.game == pack::Game::game_of_growth ? gog::kStartingMoney : c.pack->rules.starting_money;
  Followers followers = c.game == pack::Game::game_of_growth ? 0 : c.pack->rules.starting_followers;
  bool countered = false;
  for (const auto& e : events) {
    const bool seat0 = c.game == pack::Game::game_of_growth || e.actor == 0;
    switch (e.kind) {
      case EventKind::card_drawn:
        if (auto* st = slot(e.deck, e.card)) {
          ++st->offered;
          if (e.deck == DeckKind::bonus) ++st->played, ++st->successes;
        }
        break;
      case EventKind::hack_played:
        ++slot(DeckKind::hack, e.card)->played;
        break;
      case EventKind::hack_succeeded:
        ++slot(DeckKind::hack, e.card)->successes;
        slot(DeckKind::hack, e.card)->followers += e.followers;
        break;
      case EventKind::solution_spent: {
        auto* st = slot(DeckKind::prob_solve, e.card);
        ++st->played;
        ++st->successes;
        countered = true;
        break;
      }
      case EventKind::card_discarded:
        if (c.game == pack::Game::growthopoly && e.deck == DeckKind::prob_solve) {
          auto* st = slot(DeckKind::prob_solve, e.card);
          ++st->played;
          if (countered) ++st->successes;
          countered = false;
        }
        break;
      case EventKind::gained_followers:
      case EventKind::lost_followers:
        if (c.game == pack::Game::growthopoly && e.card >= 0) {
          slot(e.detail == "bonus" ? DeckKind::bonus : DeckKind::prob_solve, e.card)->followers += e.followers;
        }
        break;
      default:
        break;
    }
    if (!c.collect_trajectories || !seat0) continue;
    if (e.kind == EventKind::paid || e.kind == EventKind::gained_money) money += e.money;
    if (e.kind == EventKind::hack_played) money += e.money;
    if (e.kind == EventKind::employee_hired) money += e.money;
    if (e.kind == EventKind::gained_followers || e.kind == EventKind::lost_followers ||
        e.kind == EventKind::hack_succeeded) {
      followers += e.followers;
    }
    if (e.kind == EventKind::turn_ended || e.kind == EventKind::game_ended) {
      r.trajectory.push_back({e.turn, money, followers});
    }
  }
}

GameResult run_one(const SimConfig& c, std::int64_t index) {
  const auto i = static_cast<std::uint64_t>(index);
  const RngStream game_stream = derive_stream(c.master_seed, i);
  const RngStream policy_stream = derive_stream(c.master_seed, i | kPolicyStreamBit);
  GameResult r;
  if (c.game == pack::Game::game_of_growth) {
    const auto run = play_gog(c.pack, c.startup_type, *c.policies.front(), game_stream, policy_stream);
    const auto& s = run.final_state;
    if (run.diagnostic) {
      r.aborted = true;
      r.diagnostic = "game " + std::to_string(index) + ": " + *run.diagnostic;
      return r;
    }
    r.outcome = outcome_label(s.outcome);
    r.winner = s.outcome.winner.value_or(-1);
    r.finished = true;
    r.turns = s.outcome.turns_elapsed;
    r.money = s.resources.money;
    r.followers = s.resources.followers;
    tally(c, s.events, r);
  } else {
    std::vector<const Policy*> seats;
    for (const auto& p : c.policies) seats.push_back(p.get());
    const auto run = play_growthopoly(c.pack, sim_players(c.seats), seats, game_stream, policy_stream, c.max_turns);
    const auto& s = run.final_state;
    if (run.diagnostic) {
      r.aborted = true;
      r.diagnostic = "game " + std::to_string(index) + ": " + *run.diagnostic;
      return r;
    }
    r.outcome = outcome_label(s.outcome);
    r.winner = s.outcome.winner.value_or(-1);
    r.finished = s.outcome.finished();
    r.turns = r.finished ? s.outcome.turns_elapsed : s.turn_number;
    r.money = s.players.front().resources.money;
    r.followers = s.players.front().resources.followers;
    tally(c, s.events, r);
  }
  return r;
}

std::string policy_label(const SimConfig& c) {
  std::string out;
  for (const auto& p : c.policies) {
    if (!out.empty()) out += '+';
    out += p->name();
  }
  return out;
}

SimReport aggregate(const SimConfig& c, std::vector<GameResult>& results) {
  SimReport report;
  report.game = c.game;
  report.policy = policy_label(c);
  report.master_seed = c.master_seed;
  report.wins_by_seat.assign(c.game == pack::Game::game_of_growth ? 1 : static_cast<std::size_t>(c.seats), 0);
  report.card_stats = empty_card_stats(c);
  for (auto& r : results) {
    if (r.aborted) {
      ++report.aborted;
      report.diagnostics.push_back(std::move(r.diagnostic));
      continue;
    }
    ++report.games_played;
    ++report.outcome_breakdown[r.outcome];
    if (r.winner >= 0) ++report.wins_by_seat[static_cast<std::size_t>(r.winner)];
    if (r.winner == 0) ++report.wins;
    if (r.finished) {
      ++report.finished_games;
      report.turns_sum += r.turns;
    }
    report.money_sum += r.money;
    report.followers_sum += r.followers;
    for (std::size_t k = 0; k < r.cards.size(); ++k) {
      auto& total = report.card_stats[k];
      total.offered += r.cards[k].offered;
      total.played += r.cards[k].played;
      total.successes += r.cards[k].successes;
      total.followers += r.cards[k].followers;
    }
    if (c.collect_trajectories) report.trajectories.push_back(std::move(r.trajectory));
  }
  return report;
}

SimConfig normalized(const SimConfig& config) {
  SimConfig c = config;
  if (c.game == pack::Game::game_of_growth) c.seats = 1;
  if (c.policies.size() == 1 && c.seats > 1) c.policies.assign(static_cast<std::size_t>(c.seats), c.policies.front());
  return c;
}

}  // namespace

void validate_config(const SimConfig& c) {
  if (!c.pack) throw GameError("invalid_pack", "no pack given");
  if (c.pack->game != c.game) throw GameError("invalid_pack", "pack is for the other game");
  if (pack::has_errors(pack::validate_pack(*c.pack))) throw GameError("invalid_pack", "pack has validation errors");
  if (c.num_games < 1) throw GameError("invalid_config", "num_games must be at least 1");
  if (c.policies.empty()) throw GameError("invalid_config", "no policy given");
  for (const auto& p : c.policies) {
    if (!p) throw GameError("invalid_config", "unknown policy");
  }
  if (c.game == pack::Game::game_of_growth) {
    if (c.policies.size() != 1) throw GameError("invalid_config", "The Game of Growth has a single seat");
    if (!c.pack->startup(c.startup_type)) throw GameError("invalid_config", "pack lacks the startup type");
  } else {
    if (c.seats < 2 || c.seats > 8) throw GameError("invalid_config", "Growthopoly needs 2 to 8 seats");
    if (c.policies.size() != 1 && c.policies.size() != static_cast<std::size_t>(c.seats)) {
      throw GameError("invalid_config", "give one policy or one per seat");
    }
    if (c.max_turns < 1) throw GameError("invalid_config", "max_turns must be positive");
  }
  if (c.threads < 0) throw GameError("invalid_config", "threads must be nonnegative");
}

SimReport run_batch_serial(const SimConfig& config) {
  validate_config(config);
  const SimConfig c = normalized(config);
  std::vector<GameResult> results(static_cast<std::size_t>(c.num_games));
  for (std::int64_t i = 0; i < c.num_games; ++i) results[static_cast<std::size_t>(i)] = run_one(c, i);
  return aggregate(c, results);
}

SimReport run_batch(const SimConfig& config) {
  validate_config(config);
  const SimConfig c = normalized(config);
  std::vector<GameResult> results(static_cast<std::size_t>(c.num_games));
  const int threads = c.threads > 0 ? c.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
  for (std::int64_t i = 0; i < c.num_games; ++i) results[static_cast<std::size_t>(i)] = run_one(c, i);
  return aggregate(c, results);
}

HackEv hack_card_ev(const pack::HackCardDef& card, const HackModifiers& m) {
  const Ratio p{7 - card.success_threshold, 6};
  const Ratio gain = m.follower_gain_multiplier;
  HackEv ev;
  ev.expected_followers = Ratio{p.num * card.follower_gain * gain.num, p.den * gain.den}.normalized();
  const std::int64_t keep = 100 - std::min(100, std::max(0, m.discount_percent));
  ev.expected_net_cost =
      Ratio{card.cost * m.hack_cost_multiplier.num * keep, m.hack_cost_multiplier.den * 100}.normalized();
  if (ev.expected_net_cost.num > 0) {
    ev.followers_per_dollar = Ratio{ev.expected_followers.num * ev.expected_net_cost.den,
                                    ev.expected_followers.den * ev.expected_net_cost.num}
                                  .normalized();
  }
  return ev;
}

std::int64_t hack_trial_successes(const pack::HackCardDef& card, std::int64_t trials, std::uint64_t master_seed) {
  std::int64_t hits = 0;
  for (std::int64_t i = 0; i < trials; ++i) {
    RngStream stream = derive_stream(master_seed, static_cast<std::uint64_t>(i));
    hits += roll_die(stream).value >= card.success_threshold;
  }
  return hits;
}

}  // namespace growthlab::sim
