#include <algorithm>
#include <stdexcept>

#include "reference.hpp"

namespace reference {

Growthopoly::Growthopoly(const json& pack, const std::vector<std::pair<std::string, std::string>>& players,
                         std::uint64_t seed, std::string pack_label)
    : pack_(pack), label_(std::move(pack_label)), dice_(seed, 0) {
  for (int i = 0; i < static_cast<int>(pack_["bonus_deck"].size()); ++i) bonus_.draw.push_back(i);
  for (int i = 0; i < static_cast<int>(pack_["prob_solve_deck"].size()); ++i) probs_.draw.push_back(i);
  dice_.shuffle(bonus_.draw);
  dice_.shuffle(probs_.draw);
  int start = 0;
  for (int i = 0; i < static_cast<int>(pack_["board"]["spaces"].size()); ++i) {
    if (space(i)["kind"] == "start") start = i;
  }
  for (const auto& [id, specialty] : players) {
    Player p;
    p.id = id;
    p.specialty = specialty;
    p.position = start;
    p.money = pack_["rules"]["starting_money"].get<std::int64_t>();
    p.followers = pack_["rules"]["starting_followers"].get<std::int64_t>();
    players_.push_back(p);
  }
}

bool Growthopoly::counters(int solution, const std::string& tag) const {
  for (const auto& t : card(solution)["counters_tags"]) {
    if (t == tag) return true;
  }
  return false;
}

std::vector<std::string> Growthopoly::tags() const {
  std::vector<std::string> out;
  for (const auto& c : pack_["prob_solve_deck"]) {
    if (c["kind"] != "problem") continue;
    const std::string tag = c["tag"];
    if (std::find(out.begin(), out.end(), tag) == out.end()) out.push_back(tag);
  }
  return out;
}

void Growthopoly::proposals(json& out) const {
  if (proposed_ >= pack_["rules"]["trade"]["max_proposals_per_turn"].get<int>()) return;
  const auto& steps = pack_["rules"]["trade"]["money_steps"];
  const auto all_tags = tags();
  const Player& me = players_[static_cast<std::size_t>(current_)];
  for (int other = 0; other < static_cast<int>(players_.size()); ++other) {
    if (other == current_) continue;
    const Player& them = players_[static_cast<std::size_t>(other)];
    auto offer = [&](int give_card, std::int64_t give_money, const std::string& tag, std::int64_t receive) {
      out.push_back({{"kind", "propose_trade"}, {"counterparty", other}, {"give_card", give_card},
                     {"give_money", give_money}, {"want_tag", tag}, {"receive_money", receive}});
    };
    for (int c : me.solutions) {
      for (const auto& step : steps) {
        if (them.money >= step.get<std::int64_t>()) offer(c, 0, "", step.get<std::int64_t>());
      }
      for (const auto& tag : all_tags) offer(c, 0, tag, 0);
    }
    for (const auto& step : steps) {
      if (me.money < step.get<std::int64_t>()) continue;
      for (const auto& tag : all_tags) offer(-1, step.get<std::int64_t>(), tag, 0);
    }
  }
}

json Growthopoly::legal_moves() const {
  json out = json::array();
  const Player& me = players_[static_cast<std::size_t>(current_)];
  if (phase_ == "awaiting_roll") {
    out.push_back({{"kind", "roll_and_move"}});
    proposals(out);
  } else if (phase_ == "slush_roll") {
    out.push_back({{"kind", "roll_and_move"}});
  } else if (phase_ == "skill_offer") {
    if (me.money >= space(me.position)["study_cost"].get<std::int64_t>()) {
      out.push_back({{"kind", "begin_study"}, {"space", me.position}});
    }
    out.push_back({{"kind", "decline_study"}});
  } else if (phase_ == "trade_fair_offer") {
    if (me.money >= space(me.position)["price"].get<std::int64_t>()) {
      out.push_back({{"kind", "buy_followers"}, {"space", me.position}});
    }
    out.push_back({{"kind", "decline_trade_fair"}});
  } else if (phase_ == "problem_pending") {
    const std::string tag = card(held_)["tag"];
    for (int c : me.solutions) {
      if (counters(c, tag)) out.push_back({{"kind", "play_solution"}, {"card", c}, {"problem", held_}});
    }
    out.push_back({{"kind", "end_turn"}});
    proposals(out);
  } else if (phase_ == "trade_pending") {
    const Player& them = players_[static_cast<std::size_t>(offer_->counterparty)];
    if (offer_->want_tag.empty()) {
      out.push_back({{"kind", "respond_trade"}, {"accept", true}, {"card", -1}});
    } else {
      for (int c : them.solutions) {
        if (counters(c, offer_->want_tag)) out.push_back({{"kind", "respond_trade"}, {"accept", true}, {"card", c}});
      }
    }
    out.push_back({{"kind", "respond_trade"}, {"accept", false}, {"card", -1}});
  } else if (phase_ == "turn_over") {
    out.push_back({{"kind", "end_turn"}});
  }
  return out;
}

void Growthopoly::phase(const std::string& p) {
  if (!over()) phase_ = p;
}

bool Growthopoly::add_followers(int who, std::int64_t amount) {
  if (over() || amount <= 0) return false;
  Player& p = players_[static_cast<std::size_t>(who)];
  p.followers += amount;
  if (p.followers >= 5000) {
    winner_ = who;
    turns_elapsed_ = turn_;
    phase_ = "ended";
    return true;
  }
  return false;
}

int Growthopoly::draw(Pile& pile) {
  if (pile.draw.empty()) {
    if (pile.discard.empty()) return -1;
    pile.draw = pile.discard;
    pile.discard.clear();
    dice_.shuffle(pile.draw);
  }
  const int c = pile.draw.front();
  pile.draw.erase(pile.draw.begin());
  return c;
}

void Growthopoly::penalty(int who) {
  Player& p = players_[static_cast<std::size_t>(who)];
  p.money -= std::min(p.money, card(held_)["money_penalty"].get<std::int64_t>());
  p.followers -= std::min(p.followers, card(held_)["follower_penalty"].get<std::int64_t>());
  probs_.discard.push_back(held_);
  held_ = -1;
}

void Growthopoly::land(int who) {
  Player& p = players_[static_cast<std::size_t>(who)];
  const json& sp = space(p.position);
  const std::string kind = sp["kind"];
  if (kind == "skill") {
    int owner = -1;
    for (int i = 0; i < static_cast<int>(players_.size()) && owner < 0; ++i) {
      if (players_[static_cast<std::size_t>(i)].skills.count(p.position)) owner = i;
    }
    if (owner >= 0) {
      const Player& o = players_[static_cast<std::size_t>(owner)];
      if (o.skills.at(p.position) == 0) {
        const std::int64_t base = sp["follower_reward"];
        if (add_followers(owner, sp["category"] == o.specialty ? base * 2 : base)) return;
      }
      phase("turn_over");
    } else {
      phase(p.money >= sp["study_cost"].get<std::int64_t>() ? "skill_offer" : "turn_over");
    }
  } else if (kind == "bonus") {
    const int c = draw(bonus_);
    if (c >= 0) {
      bonus_.discard.push_back(c);
      const json& b = pack_["bonus_deck"][static_cast<std::size_t>(c)];
      if (b["money_delta"].get<std::int64_t>() > 0) p.money += b["money_delta"].get<std::int64_t>();
      if (add_followers(who, b["follower_delta"])) return;
    }
    phase("turn_over");
  } else if (kind == "trade_fair") {
    phase(p.money >= sp["price"].get<std::int64_t>() ? "trade_fair_offer" : "turn_over");
  } else if (kind == "prob_solve") {
    const int c = draw(probs_);
    if (c < 0) {
      phase("turn_over");
    } else if (card(c)["kind"] == "solution") {
      p.solutions.insert(std::upper_bound(p.solutions.begin(), p.solutions.end(), c), c);
      phase("turn_over");
    } else {
      held_ = c;
      const std::string tag = card(c)["tag"];
      bool has = false;
      for (int s : p.solutions) has = has || counters(s, tag);
      if (has || proposed_ < pack_["rules"]["trade"]["max_proposals_per_turn"].get<int>()) {
        phase("problem_pending");
      } else {
        penalty(who);
        phase("turn_over");
      }
    }
  } else if (kind == "slush") {
    p.slush = 3;
    phase("turn_over");
  } else {
    phase("turn_over");
  }
}

void Growthopoly::next_turn() {
  current_ = (current_ + 1) % static_cast<int>(players_.size());
  turn_ += 1;
  proposed_ = 0;
  Player& p = players_[static_cast<std::size_t>(current_)];
  int studying = -1;
  for (const auto& [where, left] : p.skills) {
    if (left > 0) {
      studying = where;
      break;
    }
  }
  if (studying >= 0) {
    p.skills[studying] -= 1;
    if (p.skills[studying] == 0) {
      const json& sp = space(studying);
      const std::int64_t base = sp["follower_reward"];
      if (add_followers(current_, sp["category"] == p.specialty ? 2 * base : base)) return;
    }
    phase("turn_over");
  } else if (p.slush >= 0) {
    phase("slush_roll");
  } else {
    phase("awaiting_roll");
  }
}

void Growthopoly::play(const json& move) {
  const json legal = legal_moves();
  if (std::find(legal.begin(), legal.end(), move) == legal.end()) throw std::runtime_error("not offered");
  const std::string kind = move["kind"];
  Player& me = players_[static_cast<std::size_t>(current_)];
  const int n = static_cast<int>(pack_["board"]["spaces"].size());

  if (kind == "roll_and_move" && phase_ == "slush_roll") {
    const int roll = dice_.d6();
    if (roll >= pack_["rules"]["slush"]["success_threshold"].get<int>()) {
      if (add_followers(current_, pack_["rules"]["slush"]["followers_per_success"])) return;
      me.slush -= 1;
      if (me.slush == 0) me.slush = -1;
    } else {
      me.slush = -1;
    }
    phase("turn_over");
  } else if (kind == "roll_and_move") {
    const int roll = dice_.d6();
    bool passed = false;
    for (int k = 1; k <= roll; ++k) {
      if (space((me.position + k) % n)["kind"] == "start") passed = true;
    }
    me.position = (me.position + roll) % n;
    if (passed) {
      const json& reward = pack_["rules"]["start_reward"];
      if (reward["money"].get<std::int64_t>() > 0) me.money += reward["money"].get<std::int64_t>();
      if (add_followers(current_, reward["followers"])) return;
    }
    land(current_);
  } else if (kind == "begin_study") {
    const int where = move["space"];
    const json& sp = space(where);
    const bool special = sp["category"] == me.specialty;
    me.money -= sp["study_cost"].get<std::int64_t>();
    const int turns = std::max(0, sp["level"].get<int>() - (special ? 1 : 0));
    me.skills[where] = turns;
    if (turns == 0) {
      const std::int64_t base = sp["follower_reward"];
      if (add_followers(current_, special ? 2 * base : base)) return;
    }
    phase("turn_over");
  } else if (kind == "decline_study" || kind == "decline_trade_fair") {
    phase("turn_over");
  } else if (kind == "buy_followers") {
    const json& sp = space(move["space"]);
    me.money -= sp["price"].get<std::int64_t>();
    if (add_followers(current_, sp["followers_granted"])) return;
    phase("turn_over");
  } else if (kind == "play_solution") {
    const int c = move["card"];
    me.solutions.erase(std::find(me.solutions.begin(), me.solutions.end(), c));
    probs_.discard.push_back(c);
    probs_.discard.push_back(held_);
    held_ = -1;
    phase("turn_over");
  } else if (kind == "propose_trade") {
    offer_ = Offer{current_, move["counterparty"], move["give_card"], move["give_money"],
                   move["want_tag"], move["receive_money"], phase_};
    proposed_ += 1;
    phase_ = "trade_pending";
  } else if (kind == "respond_trade") {
    const Offer o = *offer_;
    offer_.reset();
    if (move["accept"].get<bool>()) {
      Player& a = players_[static_cast<std::size_t>(o.proposer)];
      Player& b = players_[static_cast<std::size_t>(o.counterparty)];
      auto hand_over = [](Player& from, Player& to, int c) {
        from.solutions.erase(std::find(from.solutions.begin(), from.solutions.end(), c));
        to.solutions.insert(std::upper_bound(to.solutions.begin(), to.solutions.end(), c), c);
      };
      if (o.give_card >= 0) hand_over(a, b, o.give_card);
      if (move["card"].get<int>() >= 0) hand_over(b, a, move["card"]);
      a.money -= o.give_money;
      b.money += o.give_money;
      b.money -= o.receive_money;
      a.money += o.receive_money;
    }
    phase_ = o.resume;
  } else if (kind == "end_turn") {
    if (phase_ == "problem_pending") penalty(current_);
    next_turn();
  }
}

json Growthopoly::position() const {
  json doc;
  doc["game"] = "growthopoly";
  doc["pack"] = label_;
  doc["rng"] = dice_.to_json();
  doc["turn"] = turn_;
  doc["current_player"] = current_;
  doc["phase"] = phase_;
  doc["trades_proposed"] = proposed_;
  doc["held_card"] = held_;
  if (offer_) {
    doc["pending_trade"] = {{"proposer", offer_->proposer},       {"counterparty", offer_->counterparty},
                            {"give_card", offer_->give_card},     {"give_money", offer_->give_money},
                            {"want_tag", offer_->want_tag},       {"receive_money", offer_->receive_money},
                            {"resume_phase", offer_->resume}};
  } else {
    doc["pending_trade"] = nullptr;
  }
  doc["decks"] = {{"bonus", bonus_.to_json()}, {"prob_solve", probs_.to_json()}};
  json ps = json::array();
  for (const auto& p : players_) {
    json skills = json::object();
    for (const auto& [where, left] : p.skills) skills[std::to_string(where)] = left;
    ps.push_back({{"id", p.id}, {"specialty", p.specialty}, {"position", p.position}, {"money", p.money},
                  {"followers", p.followers}, {"skills", skills}, {"solutions", p.solutions},
                  {"slush", p.slush >= 0 ? json(p.slush) : json(nullptr)}});
  }
  doc["players"] = ps;
  doc["outcome"] = {{"status", winner_ >= 0 ? "won" : "ongoing"},
                    {"turns_elapsed", turns_elapsed_},
                    {"winner", winner_ >= 0 ? json(winner_) : json(nullptr)},
                    {"loss_reason", nullptr}};
  return doc;
}

}  // namespace reference
