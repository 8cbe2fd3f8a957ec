// Times run_batch_serial against run_batch on the default packs.
// Usage: batch_bench [games] [threads]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "growthlab/pack/defaults.hpp"
#include "growthlab/sim/batch.hpp"

using namespace growthlab;

namespace {

template <class F>
double time_it(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::int64_t games = argc > 1 ? std::atoll(argv[1]) : 20000;
  const int threads = argc > 2 ? std::atoi(argv[2]) : 0;
  std::cout << "game,policy,games,threads,serial_s,parallel_s,speedup,identical\n";
  for (const auto game : {pack::Game::game_of_growth, pack::Game::growthopoly}) {
    for (const char* policy : {"uniform_random", "greedy_followers"}) {
      sim::SimConfig c;
      c.game = game;
      c.pack = pack::default_pack_ptr(game);
      c.policies = {sim::make_policy(policy)};
      c.num_games = game == pack::Game::growthopoly ? games / 10 : games;
      c.master_seed = 1;
      c.threads = threads;
      sim::SimReport serial;
      sim::SimReport parallel;
      const double ts = time_it([&] { serial = sim::run_batch_serial(c); });
      const double tp = time_it([&] { parallel = sim::run_batch(c); });
      std::cout << pack::to_string(game) << ',' << policy << ',' << c.num_games << ',' << threads << ',' << ts << ','
                << tp << ',' << (tp > 0 ? ts / tp : 0.0) << ',' << (serial == parallel ? "yes" : "no") << '\n';
    }
  }
}
