#include "growthlab/sim/policy.hpp"

#include <algorithm>
#include <limits>

#include "growthlab/gog/engine.hpp"
#include "growthlab/growthopoly/engine.hpp"

namespace growthlab::sim {

namespace {

using GMove = growthopoly::Move;
using GKind = growthopoly::MoveKind;

// Index of the best move: highest score, then lowest cost, then earliest.
template <typename ScoreFn, typename CostFn>
std::size_t best_index(std::size_t count, ScoreFn score, CostFn cost) {
  std::size_t best = 0;
  std::int64_t best_score = std::numeric_limits<std::int64_t>::min();
  Money best_cost = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto sc = score(i);
    if (sc == std::numeric_limits<std::int64_t>::min()) continue;
    const auto c = cost(i);
    if (sc > best_score || (sc == best_score && c < best_cost)) {
      best = i;
      best_score = sc;
      best_cost = c;
    }
  }
  return best;
}

class UniformRandom final : public Policy {
 public:
  std::string name() const override { return "uniform_random"; }

  gog::Move choose(const gog::GogState&, std::span<const gog::Move> moves, RngStream& rng) const override {
    return moves[rng.below(moves.size())];
  }

  GMove choose(const growthopoly::GrowthopolyState&, int, std::span<const GMove> moves,
               RngStream& rng) const override {
    return moves[rng.below(moves.size())];
  }
};

class Greedy : public Policy {
 public:
  explicit Greedy(Money gog_reserve = 0, Money growthopoly_reserve = 0)
      : gog_reserve_(gog_reserve), growthopoly_reserve_(growthopoly_reserve) {}

  std::string name() const override { return "greedy_followers"; }

  gog::Move choose(const gog::GogState& s, std::span<const gog::Move> moves, RngStream&) const override {
    const auto i = best_index(
        moves.size(),
        [&](std::size_t k) {
          const Money c = move_cost(s, moves[k]);
          if (c > 0 && s.resources.money - c < gog_reserve_) return std::numeric_limits<std::int64_t>::min();
          return expected_followers_36(s, moves[k]);
        },
        [&](std::size_t k) { return move_cost(s, moves[k]); });
    return moves[i];
  }

  GMove choose(const growthopoly::GrowthopolyState& s, int seat, std::span<const GMove> moves,
               RngStream&) const override {
    if (s.phase == growthopoly::Phase::trade_pending) {
      for (const auto& m : moves) {
        if (m.accept && trade_is_profitable(s, seat, m)) return m;
      }
      return moves.back();
    }
    const Money money = s.players[static_cast<std::size_t>(seat)].resources.money;
    const auto i = best_index(
        moves.size(),
        [&](std::size_t k) {
          const Money c = move_cost(s, seat, moves[k]);
          if (c > 0 && money - c < growthopoly_reserve_) return std::numeric_limits<std::int64_t>::min();
          return expected_followers_36(s, seat, moves[k]);
        },
        [&](std::size_t k) { return move_cost(s, seat, moves[k]); });
    return moves[i];
  }

 private:
  Money gog_reserve_;
  Money growthopoly_reserve_;
};

class Thrifty final : public Greedy {
 public:
  Thrifty() : Greedy(kThriftyReserveGog, kThriftyReserveGrowthopoly) {}
  std::string name() const override { return "thrifty"; }
};

}  // namespace

std::vector<std::string_view> builtin_policy_names() { return {"uniform_random", "greedy_followers", "thrifty"}; }

PolicyPtr make_policy(std::string_view name) {
  if (name == "uniform_random") return std::make_shared<UniformRandom>();
  if (name == "greedy_followers") return std::make_shared<Greedy>();
  if (name == "thrifty") return std::make_shared<Thrifty>();
  return nullptr;
}

std::int64_t expected_followers_36(const gog::GogState& s, const gog::Move& move) {
  const auto& pack = *s.pack;
  switch (move.kind) {
    case gog::MoveKind::play_hack: {
      const auto& card = pack.hack_deck[s.hand[static_cast<std::size_t>(move.index)]];
      const std::int64_t miss = card.success_threshold - 1;
      const std::int64_t hits = gog::rerolls_left(s) > 0 ? 36 - miss * miss : 6 * (6 - miss);
      return hits * gog::follower_multiplier(s).scale_floor(card.follower_gain);
    }
    case gog::MoveKind::hire: {
      const auto& ability = pack.employee_deck[s.pending_employee].ability;
      if (ability.kind != pack::AbilityKind::passive_followers) return 0;
      return 36 * gog::follower_multiplier(s).scale_floor(ability.amount);
    }
    default:
      return 0;
  }
}

std::int64_t expected_followers_36(const growthopoly::GrowthopolyState& s, int seat, const GMove& move) {
  const auto& pack = *s.pack;
  const auto& me = s.players[static_cast<std::size_t>(seat)];
  switch (move.kind) {
    case GKind::begin_study: {
      const auto& skill = *pack.board.spaces[move.space].skill;
      return 36 * growthopoly::follower_reward(skill.follower_reward, skill.category == me.specialty);
    }
    case GKind::buy_followers:
      return 36 * pack.board.spaces[move.space].trade_fair->followers_granted;
    case GKind::play_solution:
      return 36 * std::min(me.resources.followers, pack.prob_solve_deck[move.problem].follower_penalty);
    default:
      return 0;
  }
}

Money move_cost(const gog::GogState& s, const gog::Move& move) {
  switch (move.kind) {
    case gog::MoveKind::play_hack:
      return gog::effective_hack_cost(s, s.hand[static_cast<std::size_t>(move.index)]);
    case gog::MoveKind::hire:
      return gog::effective_hire_cost(s, s.pending_employee);
    default:
      return 0;
  }
}

Money move_cost(const growthopoly::GrowthopolyState& s, int, const GMove& move) {
  const auto& pack = *s.pack;
  switch (move.kind) {
    case GKind::begin_study:
      return pack.board.spaces[move.space].skill->study_cost;
    case GKind::buy_followers:
      return pack.board.spaces[move.space].trade_fair->price;
    case GKind::propose_trade:
      return move.trade.give_money;
    case GKind::respond_trade:
      return move.accept && s.pending_trade ? s.pending_trade->trade.receive_money : 0;
    default:
      return 0;
  }
}

bool trade_is_profitable(const growthopoly::GrowthopolyState& s, int seat, const GMove& response) {
  if (!response.accept || !s.pending_trade) return false;
  const auto& trade = s.pending_trade->trade;
  if (trade.give_card < 0 || !trade.want_tag.empty() || trade.give_money > 0) return false;
  const auto& pack = *s.pack;
  Money cheapest = std::numeric_limits<Money>::max();
  for (const auto& space : pack.board.spaces) {
    if (space.trade_fair) cheapest = std::min(cheapest, space.trade_fair->price);
  }
  if (cheapest == std::numeric_limits<Money>::max() || 2 * trade.receive_money >= cheapest) return false;
  const auto& mine = s.players[static_cast<std::size_t>(seat)].solutions;
  for (const auto& tag : pack.prob_solve_deck[trade.give_card].counters_tags) {
    const bool covered = std::any_of(mine.begin(), mine.end(), [&](int c) { return pack.prob_solve_deck[c].counters(tag); });
    if (!covered) return true;
  }
  return false;
}

}  // namespace growthlab::sim
