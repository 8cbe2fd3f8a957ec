#include <fstream>
#include <ostream>

#include "commands.hpp"
#include "growthlab/core/errors.hpp"
#include "growthlab/service/session.hpp"
#include "growthlab/sim/batch.hpp"

namespace growthlab::cli {

int run_simulate(const SimulateOptions& o, std::ostream& out, std::ostream& err) {
  const auto game = service::parse_game(o.game);
  if (!game) {
    err << "unknown game '" << o.game << "'\n";
    return kExitUsage;
  }
  sim::SimConfig config;
  config.game = *game;
  config.num_games = o.games;
  config.master_seed = o.seed;
  config.seats = o.seats;
  config.max_turns = o.max_turns;
  config.threads = o.threads;
  config.collect_trajectories = !o.trajectories.empty();
  for (const auto& name : o.policies) {
    auto policy = sim::make_policy(name);
    if (!policy) {
      err << "unknown policy '" << name << "'\n";
      return kExitUsage;
    }
    config.policies.push_back(std::move(policy));
  }
  const auto startup = pack::startup_type_from_string(o.startup);
  if (!startup) {
    err << "unknown startup type '" << o.startup << "'\n";
    return kExitUsage;
  }
  config.startup_type = *startup;
  config.pack = open_pack(o.pack, *game, err);
  if (!config.pack) return kExitInvalid;

  sim::SimReport report;
  try {
    report = sim::run_batch(config);
  } catch (const GameError& e) {
    err << e.what() << '\n';
    return e.code() == "invalid_pack" ? kExitInvalid : kExitUsage;
  }
  const auto text = sim::export_report(report, o.format == "text" ? sim::ReportFormat::text : sim::ReportFormat::csv);
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
    file << text;
    if (!file) {
      err << "cannot write " << o.out << '\n';
      return kExitInvalid;
    }
  }
  if (!o.trajectories.empty()) {
    std::ofstream file(o.trajectories, std::ios::binary | std::ios::trunc);
    file << sim::export_trajectories(report);
  }
  for (const auto& d : report.diagnostics) err << "aborted " << d << '\n';
  out << "win_rate=" << sim::render_decimal(report.wins, report.games_played > 0 ? report.games_played : 1)
      << " games=" << report.games_played << " seed=" << o.seed << '\n';
  return kExitOk;
}

}  // namespace growthlab::cli
