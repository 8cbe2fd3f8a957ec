#include "growthlab/sim/run_game.hpp"

#include <algorithm>

#include "growthlab/core/errors.hpp"
#include "growthlab/gog/engine.hpp"
#include "growthlab/growthopoly/engine.hpp"

namespace growthlab::sim {

namespace {

template <typename Moves, typename Move>
bool offered(const Moves& moves, const Move& move) {
  return std::find(moves.begin(), moves.end(), move) != moves.end();
}

}  // namespace

GogRun play_gog(pack::PackPtr pack, pack::StartupType startup, const Policy& policy, RngStream game_stream,
                RngStream policy_stream) {
  GogRun run{gog::new_game(std::move(pack), startup, game_stream), {}, std::nullopt};
  run.final_state = run.initial;
  auto& s = run.final_state;
  while (!s.outcome.finished()) {
    const auto moves = gog::legal_moves(s);
    const auto move = policy.choose(s, moves, policy_stream);
    if (!offered(moves, move)) {
      run.diagnostic = "policy " + policy.name() + " chose unoffered move '" + std::string(gog::to_string(move.kind)) +
                       "' at event " + std::to_string(s.events.size());
      break;
    }
    gog::apply_move_in_place(s, move);
  }
  return run;
}

GrowthopolyRun play_growthopoly(pack::PackPtr pack, const std::vector<growthopoly::PlayerSpec>& players,
                                const std::vector<const Policy*>& seats, RngStream game_stream,
                                RngStream policy_stream, int max_turns) {
  GrowthopolyRun run{growthopoly::new_game(std::move(pack), players, game_stream), {}, std::nullopt};
  run.final_state = run.initial;
  auto& s = run.final_state;
  while (!s.outcome.finished() && s.turn_number <= max_turns) {
    const auto moves = growthopoly::legal_moves(s);
    const int seat = growthopoly::acting_player(s);
    const Policy& policy = *seats[static_cast<std::size_t>(seat) % seats.size()];
    const auto move = policy.choose(s, seat, moves, policy_stream);
    if (!offered(moves, move)) {
      run.diagnostic = "policy " + policy.name() + " at seat " + std::to_string(seat) + " chose unoffered move '" +
                       std::string(growthopoly::to_string(move.kind)) + "' at event " +
                       std::to_string(s.events.size());
      break;
    }
    growthopoly::apply_move_in_place(s, move);
  }
  return run;
}

std::vector<growthopoly::PlayerSpec> sim_players(int seats) {
  std::vector<growthopoly::PlayerSpec> out;
  for (int i = 0; i < seats; ++i) {
    out.push_back({"p" + std::to_string(i),
                   pack::kAllSkillCategories[static_cast<std::size_t>(i) % pack::kAllSkillCategories.size()]});
  }
  return out;
}

}  // namespace growthlab::sim
