#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "growthlab/gog/state.hpp"
#include "growthlab/growthopoly/state.hpp"

namespace growthlab::service {

/// "growthopoly", "game_of_growth" or "gog".
std::optional<pack::Game> parse_game(std::string_view name);

struct SessionSetup {
  pack::Game game = pack::Game::game_of_growth;
  std::uint64_t seed = 0;
  std::vector<growthopoly::PlayerSpec> players;  // Growthopoly seats
  pack::StartupType startup_type = pack::StartupType::tech;

  /// Accepts {game, seed, seats: n | [{id, specialty}], startup_type}.
  /// Throws GameError("bad_request") on malformed input.
  static SessionSetup from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;
};

/// One game plus its move log. Version = number of applied moves; every
/// version's state is reproducible from (pack, setup, moves up to it).
class Session {
 public:
  using State = std::variant<growthopoly::GrowthopolyState, gog::GogState>;

  Session(std::string id, pack::PackPtr pack, SessionSetup setup, std::string created_at);

  const std::string& id() const { return id_; }
  const SessionSetup& setup() const { return setup_; }
  const pack::PackPtr& pack() const { return pack_; }
  const std::string& created_at() const { return created_at_; }
  const State& state() const { return state_; }
  int version() const { return static_cast<int>(moves_.size()); }
  int seat_count() const;
  /// Seat expected to move, or -1 once the game is over.
  int acting_seat() const;
  const GameOutcome& outcome() const;
  std::string state_digest() const;

  /// Legal moves of the acting seat as {kind, ...} documents; a move_id is an
  /// index into this list.
  std::vector<nlohmann::json> legal_moves() const;
  /// Throws IllegalMove for the wrong seat or an out-of-range id; the session
  /// is untouched in that case. Returns the events the move produced.
  std::vector<Event> apply(int seat, int move_id);
  /// Applies a move given as a document (used by replay).
  std::vector<Event> apply_document(int seat, const nlohmann::json& move);

  /// Events produced after `version` (0 = everything after setup).
  std::vector<Event> events_since(int version) const;
  nlohmann::json view(int seat) const;

  nlohmann::json header_record() const;
  nlohmann::json move_record(int version) const;  // 1-based
  void write_log(std::ostream& out) const;
  /// Rebuilds a session from a log written by write_log (or appended to line
  /// by line). Throws GameError("bad_log") if any line fails to replay.
  static Session read_log(std::istream& in);

 private:
  std::string id_;
  pack::PackPtr pack_;
  SessionSetup setup_;
  std::string created_at_;
  State state_;
  std::vector<nlohmann::json> moves_;  // {seat, move}
  std::vector<std::size_t> marks_;     // event count at each version
};

std::string utc_timestamp();

}  // namespace growthlab::service
