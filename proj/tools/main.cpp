#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace growthlab::cli;
  CLI::App app{"growthlab: Growthopoly and The Game of Growth engine, simulator and server"};
  app.require_subcommand(1);

  ValidateOptions validate;
  auto* validate_cmd = app.add_subcommand("validate", "check a content pack");
  validate_cmd->add_option("path", validate.path, "pack file")->required();
  validate_cmd->add_option("--format", validate.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  SimulateOptions simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "run a seeded batch of policy-driven games");
  simulate_cmd->add_option("--game", simulate.game, "growthopoly or gog")->required()
      ->check(CLI::IsMember({"growthopoly", "gog", "game_of_growth"}));
  simulate_cmd->add_option("--pack", simulate.pack, "pack file, or 'default'");
  simulate_cmd->add_option("--policy", simulate.policies, "policy name, or one per seat (comma separated)")
      ->delimiter(',')->check(CLI::IsMember({"uniform_random", "greedy_followers", "thrifty"}));
  simulate_cmd->add_option("--games", simulate.games, "number of games")->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--seed", simulate.seed, "master seed");
  simulate_cmd->add_option("--out", simulate.out, "report file (default stdout)");
  simulate_cmd->add_option("--format", simulate.format, "csv or text")->check(CLI::IsMember({"csv", "text"}));
  simulate_cmd->add_option("--trajectories", simulate.trajectories, "write per-turn trajectories as csv");
  simulate_cmd->add_option("--seats", simulate.seats, "Growthopoly players")->check(CLI::Range(2, 8));
  simulate_cmd->add_option("--startup", simulate.startup, "Game of Growth startup type");
  simulate_cmd->add_option("--max-turns", simulate.max_turns, "Growthopoly turn cap")->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--threads", simulate.threads, "worker threads (0 = all)")->check(CLI::NonNegativeNumber);

  PlayOptions play;
  auto* play_cmd = app.add_subcommand("play", "play in the terminal");
  play_cmd->add_option("--game", play.game, "growthopoly or gog")
      ->check(CLI::IsMember({"growthopoly", "gog", "game_of_growth"}));
  play_cmd->add_option("--pack", play.pack, "pack file, or 'default'");
  play_cmd->add_option("--seed", play.seed, "game seed");
  play_cmd->add_option("--seats", play.seats, "Growthopoly players (hot seat)")->check(CLI::Range(2, 8));
  play_cmd->add_option("--startup", play.startup, "Game of Growth startup type");
  play_cmd->add_option("--save", play.save, "session file to write");
  auto* resume = play_cmd->add_option("--resume", play.resume, "continue a saved session");
  play_cmd->get_option("--game")->excludes(resume);

  ServeOptions serve;
  auto* serve_cmd = app.add_subcommand("serve", "run the session service");
  serve_cmd->add_option("--port", serve.port, "listen port (0 = any)")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--host", serve.host, "listen address");
  serve_cmd->add_option("--packs-dir", serve.packs_dir, "directory of named packs");
  serve_cmd->add_option("--sessions-dir", serve.sessions_dir, "where session logs live");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n";
    const CLI::App* failed = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    std::cerr << failed->help();
    return kExitUsage;
  }

  if (*validate_cmd) return run_validate(validate, std::cout, std::cerr);
  if (*simulate_cmd) return run_simulate(simulate, std::cout, std::cerr);
  if (*play_cmd) {
    if (play.game.empty() && play.resume.empty()) {
      std::cerr << "play needs --game or --resume\n\n" << play_cmd->help();
      return kExitUsage;
    }
    return run_play(play, std::cin, std::cout, std::cerr);
  }
  return run_serve(serve, std::cout, std::cerr);
}
