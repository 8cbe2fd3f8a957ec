#include "growthlab/service/session_service.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "growthlab/core/digest.hpp"
#include "growthlab/core/errors.hpp"
#include "growthlab/pack/defaults.hpp"
#include "growthlab/pack/loader.hpp"
#include "growthlab/service/view.hpp"

namespace growthlab::service {

using nlohmann::json;
namespace fs = std::filesystem;

Response error_response(int status, std::string_view code, std::string_view message) {
  return {status, {{"error", code}, {"message", message}}};
}

SessionService::SessionService(ServiceOptions options) : options_(std::move(options)) {
  std::random_device entropy;
  id_salt_ = (static_cast<std::uint64_t>(entropy()) << 32) ^ entropy();
  if (!options_.sessions_dir.empty()) fs::create_directories(options_.sessions_dir);
}

std::size_t SessionService::load_persisted() {
  if (options_.sessions_dir.empty() || !fs::exists(options_.sessions_dir)) return 0;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(options_.sessions_dir)) {
    if (entry.path().extension() == ".jsonl") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::size_t loaded = 0;
  for (const auto& path : files) {
    std::ifstream in(path);
    try {
      auto slot = std::make_shared<Slot>();
      slot->session = std::make_unique<Session>(Session::read_log(in));
      std::unique_lock lock(sessions_mutex_);
      sessions_[slot->session->id()] = std::move(slot);
      ++loaded;
    } catch (const GameError& e) {
      load_errors_.push_back(path.filename().string() + ": " + e.what());
    }
  }
  return loaded;
}

pack::PackPtr SessionService::resolve_pack(const json& spec, pack::Game game) const {
  if (spec.is_null() || (spec.is_string() && spec.get<std::string>() == "default")) {
    return pack::default_pack_ptr(game);
  }
  pack::LoadResult loaded;
  if (spec.is_object()) {
    loaded = pack::load_pack(spec);
  } else if (spec.is_string()) {
    const std::string name = spec.get<std::string>();
    const bool safe = !name.empty() && name.find('/') == std::string::npos && name.find('\\') == std::string::npos &&
                      name.find("..") == std::string::npos;
    if (!safe) throw GameError("bad_request", "pack name must be a plain file name");
    std::ifstream in(options_.packs_dir / (name + ".json"));
    if (!in) throw GameError("unknown_pack", "no pack named '" + name + "'");
    std::stringstream text;
    text << in.rdbuf();
    const std::string document = text.str();
    loaded = pack::load_pack(std::string_view(document));
  } else {
    throw GameError("bad_request", "pack must be a name or a pack document");
  }
  if (!loaded.ok()) throw GameError("invalid_pack", "pack has validation errors");
  if (loaded.pack->game != game) throw GameError("invalid_pack", "pack is for the other game");
  return std::make_shared<const pack::ContentPack>(std::move(*loaded.pack));
}

std::string SessionService::new_id() {
  const std::uint64_t n = ++id_counter_;
  return digest_hex(mix64(id_salt_ ^ mix64(n)));
}

void SessionService::persist_header(const Session& session) const {
  if (options_.sessions_dir.empty()) return;
  std::ofstream out(options_.sessions_dir / (session.id() + ".jsonl"), std::ios::trunc);
  out << session.header_record().dump() << '\n';
}

void SessionService::persist_move(const Session& session) const {
  if (options_.sessions_dir.empty()) return;
  std::ofstream out(options_.sessions_dir / (session.id() + ".jsonl"), std::ios::app);
  out << session.move_record(session.version()).dump() << '\n';
}

std::shared_ptr<SessionService::Slot> SessionService::find(const std::string& id) const {
  std::shared_lock lock(sessions_mutex_);
  const auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

Response SessionService::create_session(const json& body) {
  try {
    const SessionSetup setup = SessionSetup::from_json(body);
    auto pack = resolve_pack(body.contains("pack") ? body["pack"] : json(nullptr), setup.game);
    auto slot = std::make_shared<Slot>();
    std::string id;
    {
      std::unique_lock lock(sessions_mutex_);
      id = new_id();
    }
    slot->session = std::make_unique<Session>(id, std::move(pack), setup, utc_timestamp());
    const Session& session = *slot->session;
    persist_header(session);
    json views = json::array();
    for (int seat = 0; seat < session.seat_count(); ++seat) views.push_back(session.view(seat));
    Response out{201, {{"session_id", id}, {"version", 0}, {"views", std::move(views)}}};
    std::unique_lock lock(sessions_mutex_);
    sessions_[id] = std::move(slot);
    return out;
  } catch (const GameError& e) {
    return error_response(e.code() == "unknown_pack" ? 404 : 400, e.code(), e.what());
  }
}

Response SessionService::get_view(const std::string& id, int seat) {
  const auto slot = find(id);
  if (!slot) return error_response(404, "unknown_session", "no session " + id);
  std::lock_guard lock(slot->mutex);
  if (seat < -1 || seat >= slot->session->seat_count()) return error_response(400, "bad_seat", "no such seat");
  return {200, slot->session->view(seat)};
}

Response SessionService::post_move(const std::string& id, const json& body) {
  const auto slot = find(id);
  if (!slot) return error_response(404, "unknown_session", "no session " + id);
  if (!body.is_object() || !body.contains("seat") || !body.contains("move_id") || !body.contains("expected_version") ||
      !body["seat"].is_number_integer() || !body["move_id"].is_number_integer() ||
      !body["expected_version"].is_number_integer()) {
    return error_response(400, "bad_request", "need integer seat, move_id and expected_version");
  }
  const int seat = body["seat"].get<int>();
  std::unique_lock lock(slot->mutex);
  Session& session = *slot->session;
  if (body["expected_version"].get<int>() != session.version()) {
    Response conflict = error_response(409, "version_conflict", "session has moved on");
    conflict.body["version"] = session.version();
    return conflict;
  }
  if (seat < 0 || seat >= session.seat_count()) return error_response(400, "bad_seat", "no such seat");
  try {
    session.apply(seat, body["move_id"].get<int>());
  } catch (const IllegalMove& e) {
    Response bad = error_response(422, "illegal_move", e.what());
    bad.body["version"] = session.version();
    return bad;
  }
  persist_move(session);
  Response out{200, session.view(seat)};
  lock.unlock();
  slot->changed.notify_all();
  return out;
}

Response SessionService::get_events(const std::string& id, int since, int seat, std::chrono::milliseconds wait) {
  const auto slot = find(id);
  if (!slot) return error_response(404, "unknown_session", "no session " + id);
  std::unique_lock lock(slot->mutex);
  const Session& session = *slot->session;
  if (seat < -1 || seat >= session.seat_count()) return error_response(400, "bad_seat", "no such seat");
  if (since < 0 || since > session.version()) return error_response(400, "bad_version", "since is out of range");
  if (wait.count() > 0) {
    slot->changed.wait_for(lock, wait, [&] { return session.version() > since; });
  }
  auto events = json::array();
  for (const auto& e : session.events_since(since)) events.push_back(redact_event(e, *session.pack(), seat));
  return {200, {{"session_id", id}, {"since", since}, {"version", session.version()}, {"events", std::move(events)}}};
}

std::vector<std::string> SessionService::session_ids() const {
  std::shared_lock lock(sessions_mutex_);
  std::vector<std::string> out;
  for (const auto& [id, slot] : sessions_) out.push_back(id);
  return out;
}

std::optional<std::string> SessionService::state_digest(const std::string& id) const {
  const auto slot = find(id);
  if (!slot) return std::nullopt;
  std::lock_guard lock(slot->mutex);
  return slot->session->state_digest();
}

}  // namespace growthlab::service
