#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "growthlab/core/rng.hpp"
#include "growthlab/gog/state.hpp"
#include "growthlab/growthopoly/state.hpp"

namespace growthlab::sim {

inline constexpr Money kThriftyReserveGog = 1000;
inline constexpr Money kThriftyReserveGrowthopoly = 200;

/// Decision rule for simulated seats. Implementations must depend only on
/// their arguments; returning a move outside `moves` aborts the game.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual std::string name() const = 0;
  virtual gog::Move choose(const gog::GogState& state, std::span<const gog::Move> moves, RngStream& rng) const = 0;
  virtual growthopoly::Move choose(const growthopoly::GrowthopolyState& state, int seat,
                                   std::span<const growthopoly::Move> moves, RngStream& rng) const = 0;
};

using PolicyPtr = std::shared_ptr<const Policy>;

std::vector<std::string_view> builtin_policy_names();
/// nullptr for an unknown name.
PolicyPtr make_policy(std::string_view name);

/// Expected followers of a move in 1/36ths, the unit shared by every
/// greedy score (a d6 with one reroll has 36 outcomes).
std::int64_t expected_followers_36(const gog::GogState& state, const gog::Move& move);
std::int64_t expected_followers_36(const growthopoly::GrowthopolyState& state, int seat,
                                   const growthopoly::Move& move);

/// Money the move spends immediately.
Money move_cost(const gog::GogState& state, const gog::Move& move);
Money move_cost(const growthopoly::GrowthopolyState& state, int seat, const growthopoly::Move& move);

/// Built-in trade acceptance: a solution the seat lacks, bought for less than
/// half the cheapest trade-fair price.
bool trade_is_profitable(const growthopoly::GrowthopolyState& state, int seat, const growthopoly::Move& response);

}  // namespace growthlab::sim
