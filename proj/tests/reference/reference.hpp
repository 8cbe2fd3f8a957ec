#pragma once

// Second, naive implementation of both rule sets. Shares no code with the
// engines: reads raw pack JSON and rolls its own dice.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace reference {

using nlohmann::json;

std::string fnv_hex(const std::string& bytes);

class Dice {
 public:
  Dice(std::uint64_t seed, std::uint64_t stream);
  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);
  int d6() { return static_cast<int>(below(6)) + 1; }
  void shuffle(std::vector<int>& cards);
  json to_json() const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t key_;
  std::uint64_t count_ = 0;
};

struct Pile {
  std::vector<int> draw;
  std::vector<int> discard;
  json to_json() const { return {{"draw", draw}, {"discard", discard}}; }
};

class Growthopoly {
 public:
  Growthopoly(const json& pack, const std::vector<std::pair<std::string, std::string>>& players, std::uint64_t seed,
              std::string pack_label);

  json legal_moves() const;
  void play(const json& move);  // throws std::runtime_error for anything not offered
  json position() const;
  bool over() const { return phase_ == "ended"; }
  int turn() const { return turn_; }

 private:
  struct Player {
    std::string id;
    std::string specialty;
    int position = 0;
    std::int64_t money = 0;
    std::int64_t followers = 0;
    std::map<int, int> skills;
    std::vector<int> solutions;
    int slush = -1;
  };
  struct Offer {
    int proposer = -1;
    int counterparty = -1;
    int give_card = -1;
    std::int64_t give_money = 0;
    std::string want_tag;
    std::int64_t receive_money = 0;
    std::string resume;
  };

  const json& space(int i) const { return pack_["board"]["spaces"][static_cast<std::size_t>(i)]; }
  const json& card(int i) const { return pack_["prob_solve_deck"][static_cast<std::size_t>(i)]; }
  bool counters(int solution, const std::string& tag) const;
  std::vector<std::string> tags() const;
  void proposals(json& out) const;
  int draw(Pile& pile);
  void phase(const std::string& p);
  bool add_followers(int who, std::int64_t amount);
  void next_turn();
  void land(int who);
  void penalty(int who);

  json pack_;
  std::string label_;
  std::vector<Player> players_;
  int current_ = 0;
  int turn_ = 1;
  std::string phase_ = "awaiting_roll";
  int proposed_ = 0;
  int held_ = -1;
  std::optional<Offer> offer_;
  Pile bonus_;
  Pile probs_;
  Dice dice_;
  int winner_ = -1;
  int turns_elapsed_ = 0;
};

class GameOfGrowth {
 public:
  GameOfGrowth(const json& pack, const std::string& startup_type, std::uint64_t seed, std::string pack_label);

  json legal_moves() const;
  void play(const json& move);
  json position() const;
  bool over() const { return phase_ == "ended"; }

 private:
  const json& hack(int i) const { return pack_["hack_deck"][static_cast<std::size_t>(i)]; }
  const json& employee(int i) const { return pack_["employee_deck"][static_cast<std::size_t>(i)]; }
  std::pair<std::int64_t, std::int64_t> event_ratio(const char* field) const;
  std::int64_t hack_price(int card) const;
  std::int64_t hire_price(int card) const;
  std::int64_t scaled_followers(std::int64_t base) const;
  int spare_rerolls() const;
  int draw(Pile& pile, bool employee_pile);
  void finish(const std::string& status, const std::string& reason);

  json pack_;
  std::string label_;
  std::string startup_;
  std::int64_t money_ = 5000;
  std::int64_t followers_ = 0;
  int week_ = 1;
  int done_weeks_ = 0;
  std::string phase_ = "upkeep";
  int event_ = -1;
  std::vector<int> hand_;
  std::vector<int> played_;
  std::vector<std::pair<int, int>> staff_;  // card, week hired
  int candidate_ = -1;
  bool revealed_ = false;
  bool decided_ = false;
  int rerolls_ = 0;
  bool waive_ = false;
  bool broke_ = false;
  Pile events_;
  Pile hacks_;
  Pile people_;
  Dice dice_;
  std::string status_ = "ongoing";
  std::string reason_;
  int turns_elapsed_ = 0;
};

}  // namespace reference
