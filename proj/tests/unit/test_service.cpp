#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <thread>

#include <httplib.h>

#include "growthlab/core/rng.hpp"
#include "growthlab/service/http_server.hpp"
#include "growthlab/service/session_service.hpp"

using namespace growthlab;
using namespace growthlab::service;
using nlohmann::json;
using namespace std::chrono_literals;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("growthlab_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

json move_body(const json& view, int pick, int expected_version) {
  return {{"seat", view["acting_seat"]}, {"move_id", pick}, {"expected_version", expected_version}};
}

/// Plays `count` random moves, always as the acting seat.
void play_random(SessionService& svc, const std::string& id, int count, std::uint64_t seed) {
  RngStream rng(seed, 0);
  for (int i = 0; i < count; ++i) {
    const auto probe = svc.get_view(id, -1).body;
    const int seat = probe["acting_seat"];
    if (seat < 0) return;
    const auto view = svc.get_view(id, seat).body;
    const auto n = view["legal_moves"].size();
    REQUIRE(n > 0);
    const auto r = svc.post_move(id, move_body(view, static_cast<int>(rng.below(n)), view["version"]));
    REQUIRE(r.status == 200);
  }
}

}  // namespace

TEST_CASE("create returns an id, version 0 and one view per seat") {
  SessionService svc({});
  const auto r = svc.create_session({{"game", "growthopoly"}, {"seed", 7}, {"seats", 3}});
  REQUIRE(r.status == 201);
  CHECK(r.body["session_id"].get<std::string>().size() == 16);
  CHECK(r.body["version"] == 0);
  REQUIRE(r.body["views"].size() == 3);
  CHECK(r.body["views"][0]["seat"] == 0);
  CHECK_FALSE(r.body["views"][0]["legal_moves"].empty());
  CHECK(r.body["views"][1]["legal_moves"].empty());

  const auto gog = svc.create_session({{"game", "gog"}, {"seed", 7}, {"startup_type", "service"}});
  REQUIRE(gog.status == 201);
  CHECK(gog.body["views"].size() == 1);
  CHECK(gog.body["session_id"] != r.body["session_id"]);
}

TEST_CASE("bad create requests") {
  SessionService svc({});
  CHECK(svc.create_session({{"game", "chess"}}).status == 400);
  CHECK(svc.create_session({{"game", "gog"}, {"pack", "../etc/passwd"}}).status == 400);
  CHECK(svc.create_session({{"game", "gog"}, {"pack", "nonexistent"}}).status == 404);
  CHECK(svc.create_session({{"game", "growthopoly"}, {"seats", 1}}).status == 400);
  CHECK(svc.get_view("nope", 0).status == 404);
}

TEST_CASE("a stale expected_version gets 409 and changes nothing") {
  SessionService svc({});
  const auto created = svc.create_session({{"game", "gog"}, {"seed", 3}});
  const std::string id = created.body["session_id"];
  const auto view = created.body["views"][0];
  REQUIRE(svc.post_move(id, move_body(view, 0, 0)).status == 200);
  const auto digest = svc.state_digest(id);
  const auto stale = svc.post_move(id, move_body(svc.get_view(id, 0).body, 0, 0));
  CHECK(stale.status == 409);
  CHECK(stale.body["error"] == "version_conflict");
  CHECK(stale.body["version"] == 1);
  CHECK(svc.state_digest(id) == digest);

  const auto illegal = svc.post_move(id, move_body(view, 99, 1));
  CHECK(illegal.status == 422);
  CHECK(svc.state_digest(id) == digest);
  CHECK(svc.post_move(id, {{"seat", 0}}).status == 400);
}

TEST_CASE("moves out of turn are refused") {
  SessionService svc({});
  const auto created = svc.create_session({{"game", "growthopoly"}, {"seed", 3}, {"seats", 2}});
  const std::string id = created.body["session_id"];
  const auto r = svc.post_move(id, {{"seat", 1}, {"move_id", 0}, {"expected_version", 0}});
  CHECK(r.status == 422);
}

TEST_CASE("two pollers see the same events") {
  SessionService svc({});
  const std::string id = svc.create_session({{"game", "growthopoly"}, {"seed", 11}, {"seats", 2}}).body["session_id"];
  json first;
  json second;
  std::thread a([&] { first = svc.get_events(id, 0, -1, 5000ms).body; });
  std::thread b([&] { second = svc.get_events(id, 0, -1, 5000ms).body; });
  std::this_thread::sleep_for(50ms);
  play_random(svc, id, 1, 1);
  a.join();
  b.join();
  CHECK(first["version"] == 1);
  CHECK_FALSE(first["events"].empty());
  CHECK(first["events"] == second["events"]);

  play_random(svc, id, 30, 2);
  CHECK(svc.get_events(id, 3, 0, 0ms).body == svc.get_events(id, 3, 0, 0ms).body);
  CHECK(svc.get_events(id, 999, 0, 0ms).status == 400);
}

TEST_CASE("seats only see their own hidden information") {
  SessionService svc({});
  const std::string id = svc.create_session({{"game", "growthopoly"}, {"seed", 5}, {"seats", 2}}).body["session_id"];
  bool saw_solution = false;
  for (int round = 0; round < 200 && !saw_solution; ++round) {
    play_random(svc, id, 5, static_cast<std::uint64_t>(round));
    const auto mine = svc.get_view(id, 0).body;
    const auto theirs = svc.get_view(id, 1).body;
    CHECK_FALSE(mine.contains("rng"));
    CHECK(mine["decks"]["prob_solve"].contains("draw_count"));
    CHECK_FALSE(mine["decks"]["prob_solve"].contains("draw"));
    CHECK(mine["players"][0].contains("solutions"));
    CHECK_FALSE(mine["players"][1].contains("solutions"));
    CHECK(theirs["players"][1].contains("solutions"));
    CHECK_FALSE(theirs["players"][0].contains("solutions"));
    saw_solution = !mine["players"][0]["solutions"].empty();
    if (saw_solution) CHECK(theirs["players"][0]["solution_count"] == mine["players"][0]["solutions"].size());
  }
  CHECK(saw_solution);
  for (const auto& e : svc.get_events(id, 0, 1, 0ms).body["events"]) {
    if (e["kind"] == "deck_reshuffled") CHECK_FALSE(e.contains("cards"));
    if (e["kind"] == "card_stored" && e["actor"] == 0) CHECK_FALSE(e.contains("card"));
  }
}

TEST_CASE("persisted logs replay to the same digest") {
  const auto dir = scratch_dir("persist");
  std::string gp_id;
  std::string gog_id;
  std::optional<std::string> gp_digest;
  std::optional<std::string> gog_digest;
  {
    SessionService svc({{}, dir});
    gp_id = svc.create_session({{"game", "growthopoly"}, {"seed", 9}, {"seats", 3}}).body["session_id"];
    gog_id = svc.create_session({{"game", "gog"}, {"seed", 9}}).body["session_id"];
    play_random(svc, gp_id, 60, 4);
    play_random(svc, gog_id, 25, 4);
    gp_digest = svc.state_digest(gp_id);
    gog_digest = svc.state_digest(gog_id);
  }
  SessionService again({{}, dir});
  CHECK(again.load_persisted() == 2);
  CHECK(again.load_errors().empty());
  CHECK(again.state_digest(gp_id) == gp_digest);
  CHECK(again.state_digest(gog_id) == gog_digest);
  CHECK(again.get_view(gp_id, 0).body["version"] == 60);

  std::ofstream(dir / "broken.jsonl") << "{not json\n";
  SessionService third({{}, dir});
  CHECK(third.load_persisted() == 2);
  CHECK(third.load_errors().size() == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("named packs come from the packs directory") {
  const auto dir = scratch_dir("packs");
  std::filesystem::copy_file(GROWTHLAB_FIXTURES_DIR "/high_yield_gog.json", dir / "rich.json");
  SessionService svc({dir, {}});
  CHECK(svc.create_session({{"game", "gog"}, {"pack", "rich"}}).status == 201);
  CHECK(svc.create_session({{"game", "growthopoly"}, {"pack", "rich"}}).status == 400);
  std::filesystem::remove_all(dir);
}

TEST_CASE("http binding") {
  SessionService svc({});
  HttpServer server(svc);
  const int port = server.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread loop([&] { server.listen_after_bind(); });

  httplib::Client client("127.0.0.1", port);
  client.set_read_timeout(10, 0);
  auto health = client.Get("/health");
  REQUIRE(health);
  CHECK(health->status == 200);

  auto created = client.Post("/sessions", R"({"game":"gog","seed":4})", "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  const auto body = json::parse(created->body);
  const std::string id = body["session_id"];

  auto moved = client.Post("/sessions/" + id + "/moves", R"({"seat":0,"move_id":0,"expected_version":0})",
                           "application/json");
  REQUIRE(moved);
  CHECK(moved->status == 200);
  auto stale = client.Post("/sessions/" + id + "/moves", R"({"seat":0,"move_id":0,"expected_version":0})",
                           "application/json");
  REQUIRE(stale);
  CHECK(stale->status == 409);

  auto view = client.Get("/sessions/" + id + "/view?seat=0");
  REQUIRE(view);
  CHECK(json::parse(view->body)["version"] == 1);
  auto events = client.Get("/sessions/" + id + "/events?since=0&seat=0&wait_ms=10");
  REQUIRE(events);
  CHECK_FALSE(json::parse(events->body)["events"].empty());
  auto missing = client.Get("/sessions/zzz/view?seat=0");
  REQUIRE(missing);
  CHECK(missing->status == 404);
  auto garbage = client.Post("/sessions", "{", "application/json");
  REQUIRE(garbage);
  CHECK(garbage->status == 400);

  server.stop();
  loop.join();
}
