#include "growthlab/sim/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace growthlab::sim {

namespace {

std::string deck_name(DeckKind deck) {
  switch (deck) {
    case DeckKind::bonus: return "bonus";
    case DeckKind::prob_solve: return "prob_solve";
    case DeckKind::hack: return "hack";
    case DeckKind::event: return "event";
    case DeckKind::employee: return "employee";
    case DeckKind::none: break;
  }
  return "none";
}

std::string game_name(pack::Game game) { return game == pack::Game::growthopoly ? "growthopoly" : "gog"; }

}  // namespace

double SimReport::win_rate_half_width() const {
  if (games_played == 0) return 0.0;
  const double p = static_cast<double>(wins) / static_cast<double>(games_played);
  return 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(games_played));
}

std::string render_decimal(std::int64_t num, std::int64_t den) {
  if (den == 0) return "";
  if (den < 0) num = -num, den = -den;
  const bool negative = num < 0;
  __extension__ using i128 = __int128;
  const i128 scaled = static_cast<i128>(negative ? -num : num) * 1000000;
  const i128 q = (scaled + den / 2) / den;
  auto whole = static_cast<std::int64_t>(q / 1000000);
  auto frac = static_cast<std::int64_t>(q % 1000000);
  char digits[8];
  std::snprintf(digits, sizeof digits, "%06lld", static_cast<long long>(frac));
  std::string tail(digits);
  while (tail.size() > 1 && tail.back() == '0') tail.pop_back();
  std::string out = (negative && q != 0) ? "-" : "";
  return out + std::to_string(whole) + "." + tail;
}

std::string export_report(const SimReport& r, ReportFormat format) {
  std::ostringstream out;
  const std::int64_t games = r.games_played;
  if (format == ReportFormat::csv) {
    out << kCsvHeader << '\n';
    out << game_name(r.game) << ',' << r.policy << ',' << r.master_seed << ',' << games << ',' << r.wins << ','
        << render_decimal(r.wins, games > 0 ? games : 1) << ','
        << (r.finished_games > 0 ? render_decimal(r.turns_sum, r.finished_games) : std::string("0.0")) << ','
        << render_decimal(r.money_sum, games > 0 ? games : 1) << ','
        << render_decimal(r.followers_sum, games > 0 ? games : 1) << '\n';
    out << '\n' << kCardCsvHeader << '\n';
    for (const auto& c : r.card_stats) {
      out << deck_name(c.deck) << ',' << c.id << ',' << c.offered << ',' << c.played << ',' << c.successes << ','
          << (c.played > 0 ? render_decimal(c.successes, c.played) : std::string("0.0")) << ','
          << (c.played > 0 ? render_decimal(c.followers, c.played) : std::string("0.0")) << '\n';
    }
    return out.str();
  }

  out << game_name(r.game) << " | policy " << r.policy << " | seed " << r.master_seed << '\n';
  out << "games played:   " << games;
  if (r.aborted > 0) out << " (" << r.aborted << " aborted)";
  out << '\n';
  char half[32];
  std::snprintf(half, sizeof half, "%.4f", r.win_rate_half_width());
  out << "wins:           " << r.wins << "  win_rate " << render_decimal(r.wins, games > 0 ? games : 1) << " +/- "
      << half << '\n';
  if (r.wins_by_seat.size() > 1) {
    out << "wins by seat:  ";
    for (const auto w : r.wins_by_seat) out << ' ' << w;
    out << '\n';
  }
  out << "outcomes:      ";
  for (const auto& [label, count] : r.outcome_breakdown) out << ' ' << label << '=' << count;
  out << '\n';
  out << "mean turns:     "
      << (r.finished_games > 0 ? render_decimal(r.turns_sum, r.finished_games) : std::string("n/a")) << '\n';
  out << "mean money:     " << render_decimal(r.money_sum, games > 0 ? games : 1) << '\n';
  out << "mean followers: " << render_decimal(r.followers_sum, games > 0 ? games : 1) << '\n';
  out << "cards:\n";
  for (const auto& c : r.card_stats) {
    out << "  " << deck_name(c.deck) << ' ' << c.id << ": offered " << c.offered << ", played " << c.played;
    if (c.played > 0) {
      out << ", success " << render_decimal(c.successes, c.played) << ", followers/play "
          << render_decimal(c.followers, c.played);
    }
    out << '\n';
  }
  for (const auto& d : r.diagnostics) out << "aborted " << d << '\n';
  return out.str();
}

std::string export_trajectories(const SimReport& r) {
  std::ostringstream out;
  out << "game,turn,money,followers\n";
  for (std::size_t g = 0; g < r.trajectories.size(); ++g) {
    for (const auto& p : r.trajectories[g]) out << g << ',' << p.turn << ',' << p.money << ',' << p.followers << '\n';
  }
  return out.str();
}

}  // namespace growthlab::sim
