#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "growthlab/pack/content_pack.hpp"

namespace growthlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

struct ValidateOptions {
  std::string path;
  std::string format = "text";
};

struct SimulateOptions {
  std::string game;
  std::string pack = "default";
  std::vector<std::string> policies{"uniform_random"};
  std::int64_t games = 1000;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
  std::string trajectories;
  int seats = 2;
  std::string startup = "tech";
  int max_turns = 500;
  int threads = 0;
};

struct PlayOptions {
  std::string game;
  std::string pack = "default";
  std::uint64_t seed = 0;
  int seats = 2;
  std::string startup = "tech";
  std::string save;
  std::string resume;
};

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string packs_dir;
  std::string sessions_dir = "sessions";
};

int run_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err);
int run_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);
int run_play(const PlayOptions& options, std::istream& in, std::ostream& out, std::ostream& err);
int run_serve(const ServeOptions& options, std::ostream& out, std::ostream& err);

/// "default" picks the built-in pack for `game`; anything else is a file path.
/// Prints the problem and returns nullptr when the pack cannot be used.
pack::PackPtr open_pack(const std::string& spec, pack::Game game, std::ostream& err);

}  // namespace growthlab::cli
