#include "growthlab/service/http_server.hpp"

#include <algorithm>

#include <httplib.h>

namespace growthlab::service {

using nlohmann::json;

struct HttpServer::Impl {
  SessionService& service;
  httplib::Server server;
  explicit Impl(SessionService& s) : service(s) {}
};

namespace {

void send(httplib::Response& res, const Response& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

int int_param(const httplib::Request& req, const std::string& name, int fallback) {
  if (!req.has_param(name)) return fallback;
  try {
    return std::stoi(req.get_param_value(name));
  } catch (const std::exception&) {
    return fallback;
  }
}

}  // namespace

HttpServer::HttpServer(SessionService& service) : impl_(std::make_unique<Impl>(service)) {
  auto& server = impl_->server;
  auto& svc = impl_->service;

  server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"status":"ok"})", "application/json");
  });

  server.Post("/sessions", [&svc](const httplib::Request& req, httplib::Response& res) {
    const json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded()) return send(res, error_response(400, "bad_json", "request body is not JSON"));
    send(res, svc.create_session(body));
  });

  server.Get(R"(/sessions/([^/]+)/view)", [&svc](const httplib::Request& req, httplib::Response& res) {
    send(res, svc.get_view(req.matches[1], int_param(req, "seat", -1)));
  });

  server.Post(R"(/sessions/([^/]+)/moves)", [&svc](const httplib::Request& req, httplib::Response& res) {
    const json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded()) return send(res, error_response(400, "bad_json", "request body is not JSON"));
    send(res, svc.post_move(req.matches[1], body));
  });

  server.Get(R"(/sessions/([^/]+)/events)", [&svc](const httplib::Request& req, httplib::Response& res) {
    const int wait_ms = std::clamp(int_param(req, "wait_ms", 0), 0, 30000);
    send(res, svc.get_events(req.matches[1], int_param(req, "since", 0), int_param(req, "seat", -1),
                             std::chrono::milliseconds(wait_ms)));
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace growthlab::service
