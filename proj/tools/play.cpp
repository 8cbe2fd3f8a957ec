#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "commands.hpp"
#include "growthlab/core/errors.hpp"
#include "growthlab/gog/engine.hpp"
#include "growthlab/growthopoly/engine.hpp"
#include "growthlab/service/session.hpp"
#include "growthlab/service/view.hpp"

namespace growthlab::cli {

namespace {

using service::Session;

void render(const gog::GogState& s, std::ostream& out) {
  const auto& pack = *s.pack;
  out << "-- week " << s.week << "/" << gog::kTurns << " | " << gog::to_string(s.phase) << " | $"
      << s.resources.money << " | " << s.resources.followers << " followers | payroll $" << gog::payroll(s)
      << " --\n";
  if (s.active_event >= 0) out << "event: " << pack.event_deck[static_cast<std::size_t>(s.active_event)].label << '\n';
  if (!s.hand.empty()) {
    out << "hand:";
    for (const int card : s.hand) out << "  " << pack.hack_deck[static_cast<std::size_t>(card)].label;
    out << '\n';
  }
  if (!s.roster.empty()) {
    out << "roster:";
    for (const auto& entry : s.roster) {
      const auto& e = pack.employee_deck[static_cast<std::size_t>(entry.card)];
      out << "  " << e.label << " ($" << e.salary << "/wk)";
    }
    out << '\n';
  }
  if (s.pending_employee >= 0) {
    out << "candidate: " << pack.employee_deck[static_cast<std::size_t>(s.pending_employee)].label << '\n';
  }
}

void render(const growthopoly::GrowthopolyState& s, std::ostream& out) {
  const auto& pack = *s.pack;
  const int seat = growthopoly::acting_player(s);
  out << "-- turn " << s.turn_number << " | " << s.players[static_cast<std::size_t>(seat)].id << " to act | "
      << growthopoly::to_string(s.phase) << " --\n";
  for (std::size_t i = 0; i < s.players.size(); ++i) {
    const auto& p = s.players[i];
    out << (static_cast<int>(i) == seat ? " *" : "  ") << p.id << "  " << pack.board.spaces[static_cast<std::size_t>(p.position)].name
        << "  $" << p.resources.money << "  " << p.resources.followers << " followers  solutions " << p.solutions.size();
    for (const auto& [space, record] : p.skills) {
      out << "  " << pack.board.spaces[static_cast<std::size_t>(space)].name
          << (record.learned() ? "" : " (" + std::to_string(record.turns_remaining) + " left)");
    }
    if (p.slush) out << "  slush " << *p.slush;
    out << '\n';
  }
  const auto& me = s.players[static_cast<std::size_t>(seat)];
  if (!me.solutions.empty()) {
    out << "your solutions:";
    for (const int card : me.solutions) out << "  " << pack.prob_solve_deck[static_cast<std::size_t>(card)].label;
    out << '\n';
  }
  if (s.phase == growthopoly::Phase::problem_pending) {
    out << "problem: " << pack.prob_solve_deck[static_cast<std::size_t>(s.held_card)].label << '\n';
  }
}

// A move_id, or a move kind naming the first offered move of that kind.
std::optional<int> parse_choice(const std::string& line, const nlohmann::json& moves) {
  try {
    std::size_t used = 0;
    const int id = std::stoi(line, &used);
    if (used == line.size() && id >= 0 && id < static_cast<int>(moves.size())) return id;
    return std::nullopt;
  } catch (const std::exception&) {
  }
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (moves[i]["move"]["kind"] == line) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

bool save(const Session& session, const std::string& path, std::ostream& err) {
  std::ofstream file(path, std::ios::trunc);
  session.write_log(file);
  if (!file) {
    err << "cannot write " << path << '\n';
    return false;
  }
  return true;
}

std::string outcome_line(const Session& session) {
  const auto& o = session.outcome();
  std::string line = "outcome=" + std::string(to_string(o.status));
  if (o.loss_reason) line += " reason=" + std::string(to_string(*o.loss_reason));
  if (o.winner && session.setup().game == pack::Game::growthopoly) {
    line += " winner=" + session.setup().players[static_cast<std::size_t>(*o.winner)].id;
  }
  return line;
}

}  // namespace

int run_play(const PlayOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  std::optional<Session> session;
  std::string save_path = o.save;
  try {
    if (!o.resume.empty()) {
      std::ifstream log(o.resume);
      if (!log) {
        err << "cannot read " << o.resume << '\n';
        return kExitUsage;
      }
      session.emplace(Session::read_log(log));
      if (save_path.empty()) save_path = o.resume;
    } else {
      const auto game = service::parse_game(o.game);
      if (!game) {
        err << "unknown game '" << o.game << "'\n";
        return kExitUsage;
      }
      nlohmann::json setup = {{"game", pack::to_string(*game)}, {"seed", o.seed}, {"seats", o.seats},
                              {"startup_type", o.startup}};
      auto pack = open_pack(o.pack, *game, err);
      if (!pack) return kExitInvalid;
      session.emplace("cli-" + std::to_string(o.seed), std::move(pack), service::SessionSetup::from_json(setup),
                      service::utc_timestamp());
      if (save_path.empty()) save_path = "growthlab-" + std::string(pack::to_string(*game)) + "-" + std::to_string(o.seed) + ".jsonl";
    }
  } catch (const GameError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  while (session->acting_seat() >= 0) {
    const int seat = session->acting_seat();
    std::visit([&](const auto& s) { render(s, out); }, session->state());
    const auto view = session->view(seat);
    const auto& moves = view["legal_moves"];
    for (const auto& m : moves) out << "  " << m["move_id"].get<int>() << "  " << m["label"].get<std::string>() << '\n';

    std::optional<int> choice;
    while (!choice) {
      out << "move> " << std::flush;
      std::string line;
      if (!std::getline(in, line)) {
        out << '\n';
        if (!save(*session, save_path, err)) return kExitInvalid;
        out << "outcome=ongoing saved=" << save_path << '\n';
        return kExitOk;
      }
      line = trim(line);
      if (line.empty()) continue;
      if (line == "quit" || line == "q") {
        if (!save(*session, save_path, err)) return kExitInvalid;
        out << "outcome=ongoing saved=" << save_path << '\n';
        return kExitOk;
      }
      choice = parse_choice(line, moves);
      if (!choice) out << "no move '" << line << "'; pick a listed number\n";
    }
    const auto events = session->apply(seat, *choice);
    for (const auto& e : events) {
      if (e.kind == EventKind::phase_changed) continue;
      out << "  . " << service::describe_event(e, *session->pack(), seat) << '\n';
    }
  }

  if (!save(*session, save_path, err)) return kExitInvalid;
  out << outcome_line(*session) << " saved=" << save_path << '\n';
  return kExitOk;
}

}  // namespace growthlab::cli
