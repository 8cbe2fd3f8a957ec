#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "growthlab/core/event.hpp"
#include "growthlab/core/resources.hpp"
#include "growthlab/pack/content_pack.hpp"

namespace growthlab::sim {

struct CardStats {
  DeckKind deck = DeckKind::none;
  int card = -1;
  std::string id;
  std::int64_t offered = 0;    // times drawn
  std::int64_t played = 0;     // times it took effect
  std::int64_t successes = 0;  // hacks that succeeded, problems that were countered, otherwise == played
  std::int64_t followers = 0;  // net followers attributed to the card

  friend bool operator==(const CardStats&, const CardStats&) = default;
};

struct TrajectoryPoint {
  int turn = 0;
  Money money = 0;
  Followers followers = 0;
  friend bool operator==(const TrajectoryPoint&, const TrajectoryPoint&) = default;
};

/// All accumulators are integers so aggregation order never matters.
struct SimReport {
  pack::Game game = pack::Game::game_of_growth;
  std::string policy;
  std::uint64_t master_seed = 0;
  std::int64_t games_played = 0;
  std::int64_t wins = 0;  // games won by seat 0
  std::vector<std::int64_t> wins_by_seat;
  std::int64_t aborted = 0;
  std::vector<std::string> diagnostics;
  std::map<std::string, std::int64_t> outcome_breakdown;  // won, bankrupt, turns_exhausted, unfinished
  std::int64_t turns_sum = 0;                             // over finished games
  std::int64_t finished_games = 0;
  std::int64_t money_sum = 0;  // seat 0
  std::int64_t followers_sum = 0;
  std::vector<CardStats> card_stats;
  std::vector<std::vector<TrajectoryPoint>> trajectories;  // seat 0, per game, when collected

  /// 95% normal-approximation half width.
  double win_rate_half_width() const;

  friend bool operator==(const SimReport&, const SimReport&) = default;
};

enum class ReportFormat { csv, text };

inline constexpr std::string_view kCsvHeader =
    "game,policy,seed,games,wins,win_rate,mean_turns,mean_final_money,mean_final_followers";
inline constexpr std::string_view kCardCsvHeader = "deck,card,offered,played,successes,success_rate,mean_followers";

/// num/den as a decimal with at most 6 places, rounded half away from zero,
/// trailing zeros trimmed but at least one kept ("0.0", "0.5", "12.25").
std::string render_decimal(std::int64_t num, std::int64_t den);

std::string export_report(const SimReport& report, ReportFormat format);
std::string export_trajectories(const SimReport& report);

}  // namespace growthlab::sim
