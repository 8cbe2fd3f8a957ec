#pragma once

#include <memory>
#include <string>

#include "growthlab/service/session_service.hpp"

namespace growthlab::service {

/// HTTP binding of SessionService:
///   POST /sessions
///   GET  /sessions/{id}/view?seat=k
///   POST /sessions/{id}/moves
///   GET  /sessions/{id}/events?since=v&seat=k&wait_ms=t
class HttpServer {
 public:
  explicit HttpServer(SessionService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Port 0 picks a free port. Returns the bound port or -1.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  bool listen_after_bind();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace growthlab::service
