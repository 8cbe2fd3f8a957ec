#include <doctest.h>

#include "growthlab/core/errors.hpp"
#include "growthlab/pack/defaults.hpp"
#include "growthlab/pack/loader.hpp"
#include "growthlab/sim/batch.hpp"
#include "testkit.hpp"

using namespace growthlab;
using namespace growthlab::sim;

namespace {

pack::PackPtr fixture_pack(const std::string& name) {
  auto loaded = pack::load_pack(std::string_view(testkit::fixture(name)));
  REQUIRE(loaded.ok());
  return std::make_shared<const pack::ContentPack>(*loaded.pack);
}

SimConfig gog_config(const std::string& policy, std::int64_t games, std::uint64_t seed) {
  SimConfig c;
  c.game = pack::Game::game_of_growth;
  c.pack = pack::default_pack_ptr(c.game);
  c.policies = {make_policy(policy)};
  c.num_games = games;
  c.master_seed = seed;
  return c;
}

std::string win_rate_of(const SimReport& r) { return render_decimal(r.wins, r.games_played); }

}  // namespace

TEST_CASE("decimal rendering") {
  CHECK(render_decimal(0, 10) == "0.0");
  CHECK(render_decimal(10, 10) == "1.0");
  CHECK(render_decimal(1, 2) == "0.5");
  CHECK(render_decimal(2, 3) == "0.666667");
  CHECK(render_decimal(1, 8) == "0.125");
  CHECK(render_decimal(49, 4) == "12.25");
}

TEST_CASE("hack expected value") {
  pack::HackCardDef card;
  card.cost = 100;
  card.success_threshold = 4;
  card.follower_gain = 300;
  const auto ev = hack_card_ev(card);
  CHECK(ev.expected_followers == Ratio{150, 1});
  REQUIRE(ev.followers_per_dollar.has_value());
  CHECK(ev.followers_per_dollar->to_double() == doctest::Approx(1.5));
  HackModifiers half;
  half.hack_cost_multiplier = Ratio{1, 2};
  CHECK(hack_card_ev(card, half).followers_per_dollar->to_double() == doctest::Approx(3.0));
  card.cost = 0;
  CHECK_FALSE(hack_card_ev(card).followers_per_dollar.has_value());
}

TEST_CASE("hack success frequency matches the die") {
  for (int t : {2, 4, 6}) {
    pack::HackCardDef card;
    card.success_threshold = t;
    const auto hits = hack_trial_successes(card, 100000, 17);
    CHECK(std::abs(static_cast<double>(hits) / 1e5 - (7.0 - t) / 6.0) <= 0.01);
  }
}

TEST_CASE("parallel and serial batches agree byte for byte") {
  for (const auto game : {pack::Game::game_of_growth, pack::Game::growthopoly}) {
    SimConfig c = gog_config("greedy_followers", 300, 99);
    c.game = game;
    c.pack = pack::default_pack_ptr(game);
    c.seats = 3;
    c.collect_trajectories = true;
    const auto serial = run_batch_serial(c);
    c.threads = 4;
    const auto parallel = run_batch(c);
    CHECK(serial == parallel);
    CHECK(export_report(serial, ReportFormat::csv) == export_report(parallel, ReportFormat::csv));
    CHECK(export_trajectories(serial) == export_trajectories(parallel));
    CHECK(serial.games_played == 300);
    CHECK(serial.aborted == 0);
  }
}

TEST_CASE("csv layout") {
  const auto report = run_batch(gog_config("uniform_random", 50, 3));
  const auto csv = export_report(report, ReportFormat::csv);
  CHECK(csv.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
  CHECK(csv.find(std::string(kCardCsvHeader)) != std::string::npos);
  CHECK(csv.find("gog,uniform_random,3,50,") != std::string::npos);
  CHECK_FALSE(report.card_stats.empty());
}

TEST_CASE("greedy beats random on the default pack") {
  const auto random = run_batch(gog_config("uniform_random", 10000, 1));
  const auto greedy = run_batch(gog_config("greedy_followers", 10000, 1));
  CHECK(greedy.wins >= random.wins);
}

TEST_CASE("degenerate packs give the obvious answer") {
  auto rich = gog_config("greedy_followers", 500, 5);
  rich.pack = fixture_pack("high_yield_gog.json");
  CHECK(win_rate_of(run_batch(rich)) == "1.0");

  auto barren = gog_config("greedy_followers", 500, 5);
  barren.pack = fixture_pack("zero_yield_gog.json");
  const auto report = run_batch(barren);
  CHECK(win_rate_of(report) == "0.0");
  CHECK(report.followers_sum == 0);
  CHECK(export_report(report, ReportFormat::csv).find(",0,0.0,") != std::string::npos);
}

TEST_CASE("bad configurations are refused before any game runs") {
  const auto code_of = [](const SimConfig& c) -> std::string {
    try {
      validate_config(c);
    } catch (const GameError& e) {
      return e.code();
    }
    return "ok";
  };
  auto c = gog_config("uniform_random", 10, 1);
  CHECK(code_of(c) == "ok");
  c.num_games = 0;
  CHECK(code_of(c) == "invalid_config");
  c = gog_config("uniform_random", 10, 1);
  c.pack = pack::default_pack_ptr(pack::Game::growthopoly);
  CHECK(code_of(c) == "invalid_pack");
  c = gog_config("uniform_random", 10, 1);
  c.policies.clear();
  CHECK(code_of(c) == "invalid_config");
  CHECK(make_policy("psychic") == nullptr);
}
