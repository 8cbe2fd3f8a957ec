#pragma once

#include <chrono>
#include <condition_variable>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

#include <json.hpp>

#include "growthlab/service/session.hpp"

namespace growthlab::service {

struct Response {
  int status = 200;
  nlohmann::json body;
};

struct ServiceOptions {
  std::filesystem::path packs_dir;     // named packs: <packs_dir>/<name>.json
  std::filesystem::path sessions_dir;  // empty = in memory only
};

/// Transport-independent session protocol. Thread-safe; moves on one session
/// are serialized, and a stale expected_version gets 409.
class SessionService {
 public:
  explicit SessionService(ServiceOptions options);

  /// Replays every log in sessions_dir; returns how many sessions loaded.
  /// Logs that fail to replay are skipped and listed in load_errors().
  std::size_t load_persisted();
  const std::vector<std::string>& load_errors() const { return load_errors_; }

  Response create_session(const nlohmann::json& body);
  Response get_view(const std::string& id, int seat);
  Response post_move(const std::string& id, const nlohmann::json& body);
  /// Waits up to `wait` for a version newer than `since` when there is none.
  Response get_events(const std::string& id, int since, int seat, std::chrono::milliseconds wait);

  std::vector<std::string> session_ids() const;
  std::optional<std::string> state_digest(const std::string& id) const;

 private:
  struct Slot {
    std::mutex mutex;
    std::condition_variable changed;
    std::unique_ptr<Session> session;
  };

  std::shared_ptr<Slot> find(const std::string& id) const;
  pack::PackPtr resolve_pack(const nlohmann::json& spec, pack::Game game) const;
  std::string new_id();
  void persist_header(const Session& session) const;
  void persist_move(const Session& session) const;

  ServiceOptions options_;
  mutable std::shared_mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
  std::vector<std::string> load_errors_;
  std::uint64_t id_counter_ = 0;
  std::uint64_t id_salt_ = 0;
};

Response error_response(int status, std::string_view code, std::string_view message);

}  // namespace growthlab::service
