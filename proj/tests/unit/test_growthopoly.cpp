#include <doctest.h>

#include "growthlab/core/errors.hpp"
#include "growthlab/growthopoly/engine.hpp"
#include "growthlab/growthopoly/serialize.hpp"
#include "growthlab/pack/defaults.hpp"
#include "growthlab/pack/loader.hpp"
#include "growthlab/sim/run_game.hpp"
#include "testkit.hpp"

using namespace growthlab;
using namespace growthlab::growthopoly;

namespace {

pack::PackPtr default_pack() { return pack::default_pack_ptr(pack::Game::growthopoly); }

GrowthopolyState fresh(std::uint64_t seed = 1, int seats = 2) {
  return new_game(default_pack(), sim::sim_players(seats), seed);
}

int first_skill(const pack::ContentPack& pack, pack::SkillCategory category, int level) {
  for (int i = 0; i < pack.board.size(); ++i) {
    const auto& s = pack.board.spaces[static_cast<std::size_t>(i)];
    if (s.skill && s.skill->category == category && s.skill->level == level) return i;
  }
  return -1;
}

}  // namespace

TEST_CASE("study durations and specialty bonus") {
  CHECK(study_duration(1, false) == 1);
  CHECK(study_duration(2, false) == 2);
  CHECK(study_duration(3, false) == 3);
  CHECK(study_duration(1, true) == 0);
  CHECK(study_duration(2, true) == 1);
  CHECK(study_duration(3, true) == 2);
  CHECK(follower_reward(150, true) == 300);
  CHECK(follower_reward(150, false) == 150);
  CHECK(kWinFollowers == 5000);
  CHECK(kSlushTurns == 3);
}

TEST_CASE("player count is checked") {
  const auto pack = default_pack();
  const auto code_for = [&](int seats) -> std::string {
    try {
      new_game(pack, sim::sim_players(seats), 1);
    } catch (const GameError& e) {
      return e.code();
    }
    return "accepted";
  };
  CHECK(code_for(1) == "needs_opponents");
  CHECK(code_for(9) == "too_many_players");
  CHECK(code_for(8) == "accepted");
}

TEST_CASE("a new game starts everyone on start with the pack's stake") {
  const auto s = fresh(5, 4);
  const auto& rules = s.pack->rules;
  REQUIRE(s.players.size() == 4);
  for (const auto& p : s.players) {
    CHECK(p.position == s.pack->board.start_index());
    CHECK(p.resources.money == rules.starting_money);
    CHECK(p.resources.followers == rules.starting_followers);
  }
  CHECK(s.phase == Phase::awaiting_roll);
  CHECK(legal_moves(s).front().kind == MoveKind::roll_and_move);
  CHECK(s.events.size() == 1);
}

TEST_CASE("a specialty level-1 skill is learned on payment with doubled followers") {
  auto s = fresh();
  const auto specialty = s.players[0].specialty;
  const int space = first_skill(*s.pack, specialty, 1);
  REQUIRE(space >= 0);
  s.players[0].position = space;
  s.phase = Phase::skill_offer;
  Move study = Move::of(MoveKind::begin_study);
  study.space = space;
  const auto before = s.players[0].resources;
  const auto after = apply_move(s, study).state;
  const auto& skill = *s.pack->board.spaces[static_cast<std::size_t>(space)].skill;
  CHECK(after.players[0].skills.at(space).learned());
  CHECK(after.players[0].resources.money == before.money - skill.study_cost);
  CHECK(after.players[0].resources.followers == before.followers + 2 * skill.follower_reward);
  CHECK(after.owner_of(space) == 0);
}

TEST_CASE("slush holds a player for at most three rolls") {
  auto doc = nlohmann::json::parse(pack::default_pack_document(pack::Game::growthopoly));
  doc["rules"]["slush"]["success_threshold"] = 1;
  const auto loaded = pack::load_pack(doc);
  REQUIRE(loaded.ok());
  auto pack = std::make_shared<const pack::ContentPack>(*loaded.pack);
  for (int left = 3; left >= 1; --left) {
    auto s = new_game(pack, sim::sim_players(2), 3);
    s.players[0].slush = left;
    s.phase = Phase::slush_roll;
    const auto after = apply_move(s, Move::of(MoveKind::roll_and_move)).state;
    if (left > 1) {
      CHECK(after.players[0].slush == left - 1);
    } else {
      CHECK_FALSE(after.players[0].slush.has_value());
    }
    CHECK(after.players[0].resources.followers == s.players[0].resources.followers + pack->rules.slush_followers);
  }
}

TEST_CASE("illegal moves are rejected without side effects") {
  auto s = fresh();
  const auto digest = state_digest(s);
  CHECK_THROWS_AS(apply_move(s, Move::of(MoveKind::end_turn)), IllegalMove);
  CHECK_THROWS_AS(apply_move_in_place(s, Move::of(MoveKind::decline_study)), IllegalMove);
  CHECK(state_digest(s) == digest);
}

TEST_CASE("replaying the log rebuilds the state") {
  const auto pack = default_pack();
  const auto policy = sim::make_policy("uniform_random");
  const std::vector<const sim::Policy*> seats{policy.get(), policy.get(), policy.get()};
  for (std::uint64_t i = 0; i < 20; ++i) {
    const auto run = sim::play_growthopoly(pack, sim::sim_players(3), seats, derive_stream(4, i),
                                           derive_stream(4, i | kPolicyStreamBit), 500);
    REQUIRE_FALSE(run.diagnostic.has_value());
    const auto rebuilt = replay(run.initial, run.final_state.events);
    CHECK(state_digest(rebuilt) == state_digest(run.final_state));
    if (run.final_state.outcome.status == OutcomeStatus::won) {
      CHECK(run.final_state.players[static_cast<std::size_t>(*run.final_state.outcome.winner)].resources.followers >=
            kWinFollowers);
    }
  }
}

TEST_CASE("canonical json round-trips moves") {
  Move m = Move::of(MoveKind::propose_trade);
  m.trade.counterparty = 1;
  m.trade.give_money = 100;
  m.trade.want_tag = "outage";
  CHECK(move_from_json(to_json(m)) == m);
  CHECK_THROWS_AS(move_from_json(nlohmann::json{{"kind", "fly"}}), std::invalid_argument);
}

TEST_CASE("random walk keeps every invariant") {
  const auto stats = testkit::fuzz_growthopoly(21, 20000);
  INFO(stats.failure.value_or(""));
  CHECK_FALSE(stats.failure.has_value());
  CHECK(stats.rejected_probes > 15000);
}
