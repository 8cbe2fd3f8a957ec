#include <doctest.h>

#include "growthlab/core/digest.hpp"
#include "growthlab/core/errors.hpp"
#include "growthlab/gog/engine.hpp"
#include "growthlab/gog/serialize.hpp"
#include "growthlab/pack/defaults.hpp"
#include "growthlab/pack/loader.hpp"
#include "growthlab/sim/run_game.hpp"
#include "testkit.hpp"

using namespace growthlab;
using namespace growthlab::gog;

namespace {

pack::PackPtr default_pack() { return pack::default_pack_ptr(pack::Game::game_of_growth); }

pack::PackPtr fixture_pack(const std::string& name) {
  auto loaded = pack::load_pack(std::string_view(testkit::fixture(name)));
  REQUIRE(loaded.ok());
  return std::make_shared<const pack::ContentPack>(*loaded.pack);
}

int employee_with(const pack::ContentPack& pack, pack::AbilityKind kind) {
  for (std::size_t i = 0; i < pack.employee_deck.size(); ++i) {
    if (pack.employee_deck[i].ability.kind == kind) return static_cast<int>(i);
  }
  return -1;
}

bool pick(GogState& s, MoveKind kind) {
  for (const auto& m : legal_moves(s)) {
    if (m.kind == kind) {
      apply_move_in_place(s, m);
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("rule constants") {
  CHECK(kStartingMoney == 5000);
  CHECK(kTurns == 10);
  CHECK(kHandSize == 3);
  CHECK(kWinFollowers == 5000);
  for (int t = 2; t <= 6; ++t) {
    pack::HackCardDef card;
    card.success_threshold = t;
    CHECK(hack_success_probability(card) == Ratio{7 - t, 6});
  }
}

TEST_CASE("a new game has the starting stake and full decks") {
  const auto s = new_game(default_pack(), pack::StartupType::service, 9);
  CHECK(s.resources.money == 5000);
  CHECK(s.resources.followers == 0);
  CHECK(s.week == 1);
  CHECK(s.phase == Phase::upkeep);
  CHECK(legal_moves(s) == std::vector<Move>{Move::of(MoveKind::draw_event)});
  CHECK(testkit::check_invariants(s) == std::nullopt);
}

TEST_CASE("drawing the event deals three hacks") {
  auto s = new_game(default_pack(), pack::StartupType::tech, 2);
  REQUIRE(pick(s, MoveKind::draw_event));
  CHECK(s.phase == Phase::hacks);
  CHECK(s.hand.size() == 3);
  CHECK(s.active_event >= 0);
}

TEST_CASE("never acting runs the clock out") {
  auto s = new_game(default_pack(), pack::StartupType::tech, 3);
  int guard = 0;
  while (!s.outcome.finished() && guard++ < 200) {
    pick(s, MoveKind::draw_event) || pick(s, MoveKind::skip_remaining_hacks) || pick(s, MoveKind::reveal_employee) ||
        pick(s, MoveKind::refuse) || pick(s, MoveKind::end_turn);
  }
  CHECK(s.outcome.status == OutcomeStatus::lost);
  CHECK(s.outcome.loss_reason == LossReason::turns_exhausted);
  CHECK(s.weeks_completed == 10);
  CHECK(s.outcome.turns_elapsed == 10);
  CHECK(legal_moves(s).empty());
}

TEST_CASE("unpayable payroll bankrupts at upkeep") {
  auto s = new_game(default_pack(), pack::StartupType::tech, 4);
  const int worker = employee_with(*s.pack, pack::AbilityKind::passive_followers);
  REQUIRE(worker >= 0);
  std::erase(s.employee_cards.draw, worker);
  s.roster.push_back({worker, 1});
  s.resources.money = s.pack->employee_deck[static_cast<std::size_t>(worker)].salary - 1;
  REQUIRE(pick(s, MoveKind::draw_event));
  CHECK(s.outcome.status == OutcomeStatus::lost);
  CHECK(s.outcome.loss_reason == LossReason::bankrupt);
  CHECK(s.bankrupt);
}

TEST_CASE("discounts and rerolls come from the roster") {
  auto s = new_game(default_pack(), pack::StartupType::tech, 5);
  REQUIRE(pick(s, MoveKind::draw_event));
  const int hack = s.hand[0];
  const Money before = effective_hack_cost(s, hack);
  const int discounter = employee_with(*s.pack, pack::AbilityKind::hack_discount);
  const int reroller = employee_with(*s.pack, pack::AbilityKind::reroll_once_per_turn);
  REQUIRE(discounter >= 0);
  REQUIRE(reroller >= 0);
  CHECK(rerolls_left(s) == 0);
  s.roster.push_back({discounter, 1});
  s.roster.push_back({reroller, 1});
  const int pct = s.pack->employee_deck[static_cast<std::size_t>(discounter)].ability.amount;
  CHECK(effective_hack_cost(s, hack) <= before * (100 - pct) / 100 + 1);
  CHECK(rerolls_left(s) == 1);
  CHECK(payroll(s) == s.pack->employee_deck[static_cast<std::size_t>(discounter)].salary +
                          s.pack->employee_deck[static_cast<std::size_t>(reroller)].salary);
}

TEST_CASE("a high-yield pack is winnable and the win is final") {
  const auto pack = fixture_pack("high_yield_gog.json");
  const auto greedy = sim::make_policy("greedy_followers");
  const auto run = sim::play_gog(pack, pack::StartupType::tech, *greedy, derive_stream(1, 0),
                                 derive_stream(1, kPolicyStreamBit));
  CHECK(run.final_state.outcome.status == OutcomeStatus::won);
  CHECK(run.final_state.outcome.winner == 0);
  CHECK(run.final_state.resources.followers >= kWinFollowers);
  CHECK(legal_moves(run.final_state).empty());
}

TEST_CASE("illegal moves are rejected without side effects") {
  auto s = new_game(default_pack(), pack::StartupType::tech, 6);
  const auto digest = state_digest(s);
  CHECK_THROWS_AS(apply_move_in_place(s, Move::of(MoveKind::end_turn)), IllegalMove);
  CHECK_THROWS_AS(apply_move_in_place(s, Move::of(MoveKind::play_hack, 0)), IllegalMove);
  CHECK(state_digest(s) == digest);
  REQUIRE(pick(s, MoveKind::draw_event));
  CHECK_THROWS_AS(apply_move_in_place(s, Move::of(MoveKind::play_hack, 3)), IllegalMove);
  CHECK_THROWS_AS(apply_move_in_place(s, Move::of(MoveKind::fire, 0)), IllegalMove);
}

TEST_CASE("replaying the log rebuilds the state") {
  const auto pack = default_pack();
  const auto policy = sim::make_policy("uniform_random");
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto run = sim::play_gog(pack, pack::kAllStartupTypes[i % 3], *policy, derive_stream(8, i),
                                   derive_stream(8, i | kPolicyStreamBit));
    REQUIRE_FALSE(run.diagnostic.has_value());
    CHECK(state_digest(replay(run.initial, run.final_state.events)) == state_digest(run.final_state));
  }
}

TEST_CASE("state json is stable") {
  const auto s = new_game(default_pack(), pack::StartupType::entertainment, 10);
  const auto doc = to_canonical_json(s);
  CHECK(doc["game"] == "game_of_growth");
  CHECK(doc["money"] == 5000);
  CHECK(doc["decks"]["hack"]["draw"].size() == s.hack_cards.draw.size());
  CHECK(position_digest(s) == digest_hex(fnv1a64(to_canonical_json(s, false).dump())));
}

TEST_CASE("random walk keeps every invariant") {
  const auto stats = testkit::fuzz_gog(22, 20000);
  INFO(stats.failure.value_or(""));
  CHECK_FALSE(stats.failure.has_value());
  CHECK(stats.rejected_probes > 15000);
}
