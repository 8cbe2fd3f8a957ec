#include <csignal>
#include <cstdlib>
#include <ostream>

#include "commands.hpp"
#include "growthlab/service/http_server.hpp"

namespace growthlab::cli {

namespace {

service::HttpServer* g_server = nullptr;

void handle_signal(int) {
  if (g_server) g_server->stop();
}

}  // namespace

int run_serve(const ServeOptions& o, std::ostream& out, std::ostream& err) {
  service::ServiceOptions options;
  options.packs_dir = o.packs_dir;
  if (const char* env = std::getenv("GROWTHLAB_PACKS_DIR"); env && *env) options.packs_dir = env;
  options.sessions_dir = o.sessions_dir;

  service::SessionService svc(options);
  const auto loaded = svc.load_persisted();
  for (const auto& problem : svc.load_errors()) err << "skipped session " << problem << '\n';

  service::HttpServer server(svc);
  const int port = server.bind(o.host, o.port);
  if (port < 0) {
    err << "cannot bind " << o.host << ":" << o.port << '\n';
    return kExitInvalid;
  }
  out << "serving on http://" << o.host << ":" << port << " (" << loaded << " sessions restored, packs from "
      << (options.packs_dir.empty() ? "<built-in only>" : options.packs_dir.string()) << ")" << std::endl;
  g_server = &server;
  std::signal(SIGINT, handle_signal);
  std::signal(SIGTERM, handle_signal);
  server.listen_after_bind();
  g_server = nullptr;
  return kExitOk;
}

}  // namespace growthlab::cli
