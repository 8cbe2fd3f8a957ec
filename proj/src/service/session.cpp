#include "growthlab/service/session.hpp"

#include <ctime>
#include <istream>
#include <ostream>

#include "growthlab/core/errors.hpp"
#include "growthlab/gog/engine.hpp"
#include "growthlab/gog/serialize.hpp"
#include "growthlab/growthopoly/engine.hpp"
#include "growthlab/growthopoly/serialize.hpp"
#include "growthlab/pack/loader.hpp"
#include "growthlab/service/view.hpp"

namespace growthlab::service {

using nlohmann::json;

namespace {

template <typename... Fs>
struct overload : Fs... {
  using Fs::operator()...;
};
template <typename... Fs>
overload(Fs...) -> overload<Fs...>;

Session::State start(const pack::PackPtr& pack, const SessionSetup& setup) {
  if (setup.game == pack::Game::growthopoly) return growthopoly::new_game(pack, setup.players, setup.seed);
  return gog::new_game(pack, setup.startup_type, setup.seed);
}

const std::vector<Event>& events_of(const Session::State& state) {
  return std::visit([](const auto& s) -> const std::vector<Event>& { return s.events; }, state);
}

}  // namespace

std::optional<pack::Game> parse_game(std::string_view name) {
  if (name == "gog") return pack::Game::game_of_growth;
  return pack::game_from_string(name);
}

SessionSetup SessionSetup::from_json(const json& doc) {
  if (!doc.is_object()) throw GameError("bad_request", "body must be an object");
  SessionSetup out;
  const auto game = parse_game(doc.value("game", std::string{}));
  if (!game) throw GameError("bad_request", "game must be growthopoly or game_of_growth");
  out.game = *game;
  try {
    out.seed = doc.value("seed", std::uint64_t{0});
    if (out.game == pack::Game::growthopoly) {
      const json seats = doc.value("seats", json(2));
      if (seats.is_number_integer()) {
        const int n = seats.get<int>();
        if (n < 2 || n > 8) throw GameError("bad_request", "seats must be between 2 and 8");
        for (int i = 0; i < n; ++i) {
          out.players.push_back({"p" + std::to_string(i),
                                 pack::kAllSkillCategories[static_cast<std::size_t>(i) % pack::kAllSkillCategories.size()]});
        }
      } else if (seats.is_array()) {
        for (const auto& seat : seats) {
          const auto specialty = pack::skill_category_from_string(seat.at("specialty").get<std::string>());
          if (!specialty) throw GameError("bad_request", "unknown specialty");
          out.players.push_back({seat.at("id").get<std::string>(), *specialty});
        }
      } else {
        throw GameError("bad_request", "seats must be a count or a list");
      }
    } else {
      const auto type = pack::startup_type_from_string(doc.value("startup_type", std::string("tech")));
      if (!type) throw GameError("bad_request", "unknown startup_type");
      out.startup_type = *type;
    }
  } catch (const json::exception& e) {
    throw GameError("bad_request", e.what());
  }
  return out;
}

json SessionSetup::to_json() const {
  json doc = {{"game", pack::to_string(game)}, {"seed", seed}};
  if (game == pack::Game::growthopoly) {
    auto seats = json::array();
    for (const auto& p : players) seats.push_back({{"id", p.id}, {"specialty", pack::to_string(p.specialty)}});
    doc["seats"] = std::move(seats);
  } else {
    doc["startup_type"] = pack::to_string(startup_type);
  }
  return doc;
}

Session::Session(std::string id, pack::PackPtr pack, SessionSetup setup, std::string created_at)
    : id_(std::move(id)),
      pack_(std::move(pack)),
      setup_(std::move(setup)),
      created_at_(std::move(created_at)),
      state_(start(pack_, setup_)) {
  marks_.push_back(events_of(state_).size());
}

int Session::seat_count() const {
  return setup_.game == pack::Game::growthopoly ? static_cast<int>(setup_.players.size()) : 1;
}

int Session::acting_seat() const {
  return std::visit(overload{[](const growthopoly::GrowthopolyState& s) {
                               return s.outcome.finished() ? -1 : growthopoly::acting_player(s);
                             },
                             [](const gog::GogState& s) { return s.outcome.finished() ? -1 : 0; }},
                    state_);
}

const GameOutcome& Session::outcome() const {
  return std::visit([](const auto& s) -> const GameOutcome& { return s.outcome; }, state_);
}

std::string Session::state_digest() const {
  return std::visit(overload{[](const growthopoly::GrowthopolyState& s) { return growthopoly::state_digest(s); },
                             [](const gog::GogState& s) { return gog::state_digest(s); }},
                    state_);
}

std::vector<json> Session::legal_moves() const {
  std::vector<json> out;
  std::visit(overload{[&](const growthopoly::GrowthopolyState& s) {
                        for (const auto& m : growthopoly::legal_moves(s)) out.push_back(growthopoly::to_json(m));
                      },
                      [&](const gog::GogState& s) {
                        for (const auto& m : gog::legal_moves(s)) out.push_back(gog::to_json(m));
                      }},
             state_);
  return out;
}

std::vector<Event> Session::apply(int seat, int move_id) {
  const auto moves = legal_moves();
  if (move_id < 0 || move_id >= static_cast<int>(moves.size())) {
    throw IllegalMove("move_id " + std::to_string(move_id) + " is not offered");
  }
  return apply_document(seat, moves[static_cast<std::size_t>(move_id)]);
}

std::vector<Event> Session::apply_document(int seat, const json& move) {
  if (seat != acting_seat()) throw IllegalMove("seat " + std::to_string(seat) + " is not the acting seat");
  const std::size_t before = events_of(state_).size();
  try {
    std::visit(overload{[&](growthopoly::GrowthopolyState& s) {
                          growthopoly::apply_move_in_place(s, growthopoly::move_from_json(move));
                        },
                        [&](gog::GogState& s) { gog::apply_move_in_place(s, gog::move_from_json(move)); }},
               state_);
  } catch (const std::invalid_argument& e) {
    throw IllegalMove(e.what());
  } catch (const json::exception& e) {
    throw IllegalMove(e.what());
  }
  moves_.push_back({{"seat", seat}, {"move", move}});
  const auto& events = events_of(state_);
  marks_.push_back(events.size());
  return {events.begin() + static_cast<std::ptrdiff_t>(before), events.end()};
}

std::vector<Event> Session::events_since(int version) const {
  const auto& events = events_of(state_);
  if (version < 0) version = 0;
  if (version >= this->version()) return {};
  return {events.begin() + static_cast<std::ptrdiff_t>(marks_[static_cast<std::size_t>(version)]), events.end()};
}

json Session::view(int seat) const {
  json doc = std::visit([&](const auto& s) { return seat_view(s, seat); }, state_);
  doc["session_id"] = id_;
  doc["version"] = version();
  auto moves = json::array();
  if (seat >= 0 && seat == acting_seat()) {
    const auto legal = legal_moves();
    for (std::size_t i = 0; i < legal.size(); ++i) {
      std::string label = std::visit(
          overload{[&](const growthopoly::GrowthopolyState& s) {
                     return describe_move(s, growthopoly::move_from_json(legal[i]));
                   },
                   [&](const gog::GogState& s) { return describe_move(s, gog::move_from_json(legal[i])); }},
          state_);
      moves.push_back({{"move_id", i}, {"move", legal[i]}, {"label", std::move(label)}});
    }
  }
  doc["legal_moves"] = std::move(moves);
  return doc;
}

json Session::header_record() const {
  return {{"session", id_}, {"created_at", created_at_}, {"setup", setup_.to_json()},
          {"pack", pack::serialize_pack(*pack_)}};
}

json Session::move_record(int version) const {
  json rec = moves_.at(static_cast<std::size_t>(version - 1));
  rec["version"] = version;
  return rec;
}

void Session::write_log(std::ostream& out) const {
  out << header_record().dump() << '\n';
  for (int v = 1; v <= version(); ++v) out << move_record(v).dump() << '\n';
}

Session Session::read_log(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw GameError("bad_log", "empty session log");
  try {
    const json header = json::parse(line);
    auto loaded = pack::load_pack(header.at("pack"));
    if (!loaded.ok()) throw GameError("bad_log", "session pack no longer validates");
    Session session(header.at("session").get<std::string>(),
                    std::make_shared<const pack::ContentPack>(std::move(*loaded.pack)),
                    SessionSetup::from_json(header.at("setup")), header.value("created_at", std::string{}));
    int expected = 1;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const json rec = json::parse(line);
      if (rec.at("version").get<int>() != expected) throw GameError("bad_log", "version gap in session log");
      session.apply_document(rec.at("seat").get<int>(), rec.at("move"));
      ++expected;
    }
    return session;
  } catch (const json::exception& e) {
    throw GameError("bad_log", e.what());
  } catch (const IllegalMove& e) {
    throw GameError("bad_log", std::string("logged move no longer applies: ") + e.what());
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace growthlab::service
