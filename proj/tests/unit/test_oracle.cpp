#include <doctest.h>

#include "testkit.hpp"

TEST_CASE("reference agrees with the Game of Growth engine") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto diff = testkit::oracle_gog(11, i);
    INFO("game " << i << ": " << diff.value_or(""));
    REQUIRE_FALSE(diff.has_value());
  }
}

TEST_CASE("reference agrees with the Growthopoly engine") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto diff = testkit::oracle_growthopoly(11, i);
    INFO("game " << i << ": " << diff.value_or(""));
    REQUIRE_FALSE(diff.has_value());
  }
}
