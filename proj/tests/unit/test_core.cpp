#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "growthlab/core/digest.hpp"
#include "growthlab/core/event.hpp"
#include "growthlab/core/rational.hpp"
#include "growthlab/core/rng.hpp"

using namespace growthlab;

TEST_CASE("fnv1a64 matches published vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
  CHECK(digest_hex(0xabcULL) == "0000000000000abc");
}

TEST_CASE("rng streams are pure functions of seed, index and cursor") {
  RngStream a(42, 7);
  RngStream b(42, 7);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  CHECK(a.cursor() == 100);

  RngStream c(42, 7, 50);
  RngStream d(42, 7);
  d.advance(50);
  CHECK(c.next_u64() == d.next_u64());
  CHECK(RngStream(42, 8).next_u64() != RngStream(42, 7).next_u64());
  CHECK(RngStream(43, 7).next_u64() != RngStream(42, 7).next_u64());
}

TEST_CASE("first draw is splitmix of the stream key") {
  RngStream s(1, 0);
  CHECK(s.key() == mix64(1 ^ mix64(kStreamSalt)));
  CHECK(s.next_u64() == mix64(s.key() + kGolden));
}

TEST_CASE("die rolls cover one to six roughly evenly") {
  RngStream s(9, 1);
  std::array<int, 7> counts{};
  for (int i = 0; i < 60000; ++i) ++counts[static_cast<std::size_t>(roll_die(s).value)];
  CHECK(counts[0] == 0);
  for (int face = 1; face <= 6; ++face) CHECK(std::abs(counts[static_cast<std::size_t>(face)] - 10000) < 400);
  CHECK(s.cursor() == 60000);
}

TEST_CASE("shuffle permutes and consumes n-1 draws") {
  std::vector<int> cards(20);
  std::iota(cards.begin(), cards.end(), 0);
  RngStream s(3, 3);
  CHECK(shuffle_in_place(cards, s) == 19);
  CHECK(s.cursor() == 19);
  auto sorted = cards;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  CHECK(sorted.front() == 0);
  CHECK(sorted.back() == 19);

  std::vector<int> one{5};
  CHECK(shuffle_in_place(one, s) == 0);
}

TEST_CASE("ratios parse, print and scale exactly") {
  CHECK(Ratio::parse("1/2")->to_string() == "1/2");
  CHECK(Ratio::parse("2/4")->to_string() == "1/2");
  CHECK(Ratio::parse("0.75")->to_string() == "3/4");
  CHECK(Ratio::parse("2")->to_string() == "2");
  CHECK_FALSE(Ratio::parse("x").has_value());
  CHECK_FALSE(Ratio::parse("1/0").has_value());
  CHECK(Ratio{3, 2}.scale_floor(5) == 7);
  CHECK(Ratio{1, 3}.scale_floor(100) == 33);
  CHECK(Ratio{1, 2} == Ratio{2, 4});
}

TEST_CASE("events round-trip through json") {
  Event e;
  e.sequence = 12;
  e.kind = EventKind::card_drawn;
  e.turn = 3;
  e.actor = 1;
  e.deck = DeckKind::hack;
  e.card = 4;
  e.money = -20;
  e.detail = "x";
  e.cards = {3, 1, 2};
  CHECK(event_from_json(to_json(e)) == e);
  CHECK(event_kind_from_string(to_string(EventKind::deck_reshuffled)) == EventKind::deck_reshuffled);
}
