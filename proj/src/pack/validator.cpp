#include "growthlab/pack/validator.hpp"

#include <algorithm>
#include <set>

namespace growthlab::pack {

namespace {

constexpr int kMinBoardLength = 12;
constexpr int kHandSize = 3;

class Checker {
 public:
  void fail(std::string path, std::string rule, std::string message) {
    out.push_back({std::move(path), std::move(rule), std::move(message), Severity::error});
  }
  std::vector<Violation> out;
};

std::string at(std::string_view section, std::size_t i) {
  return std::string(section) + "[" + std::to_string(i) + "]";
}

template <class Cards>
void check_ids(Checker& c, const Cards& cards, std::string_view section) {
  if (cards.empty()) {
    c.fail(std::string(section), "deck.nonempty", "deck must contain at least one card");
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < cards.size(); ++i) {
    if (!seen.insert(cards[i].id).second) {
      c.fail(at(section, i) + ".id", "deck.duplicate_id", "card id '" + cards[i].id + "' is used twice");
    }
  }
}

void check_growthopoly(Checker& c, const ContentPack& pack) {
  const auto& rules = pack.rules;
  if (rules.starting_money < 0 || rules.starting_followers < 0) {
    c.fail("rules", "rules.starting_resources_nonnegative", "starting money and followers must be >= 0");
  }
  if (rules.start_reward.money < 0 || rules.start_reward.followers < 0) {
    c.fail("rules.start_reward", "rules.start_reward_nonnegative", "start reward must be >= 0");
  }
  if (rules.slush_success_threshold < 1 || rules.slush_success_threshold > 6) {
    c.fail("rules.slush.success_threshold", "rules.slush_threshold_range", "slush threshold must be a die face 1..6");
  }
  if (rules.slush_followers <= 0) {
    c.fail("rules.slush.followers_per_success", "rules.slush_followers_positive",
           "slush success must grant followers");
  }
  for (std::size_t i = 0; i < rules.trade_money_steps.size(); ++i) {
    if (rules.trade_money_steps[i] <= 0) {
      c.fail(at("rules.trade.money_steps", i), "rules.trade_steps_positive", "trade money steps must be > 0");
    }
  }
  if (rules.max_trade_proposals_per_turn < 0) {
    c.fail("rules.trade.max_proposals_per_turn", "rules.trade_limit_nonnegative", "limit must be >= 0");
  }

  const auto& spaces = pack.board.spaces;
  int starts = 0;
  int slushes = 0;
  std::set<SkillCategory> covered;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    const auto& space = spaces[i];
    const auto path = at("board.spaces", i);
    starts += space.kind == SpaceKind::start;
    slushes += space.kind == SpaceKind::slush;
    const bool wants_skill = space.kind == SpaceKind::skill;
    const bool wants_fair = space.kind == SpaceKind::trade_fair;
    if (wants_skill != space.skill.has_value() || wants_fair != space.trade_fair.has_value()) {
      c.fail(path, "space.kind_fields",
             "fields do not match space kind '" + std::string(to_string(space.kind)) + "'");
    }
    if (wants_skill && space.skill) {
      const auto& skill = *space.skill;
      covered.insert(skill.category);
      if (skill.level < 1 || skill.level > 3) {
        c.fail(path + ".level", "skill.level_range", "skill level must be 1, 2 or 3");
      }
      if (skill.study_cost <= 0) c.fail(path + ".study_cost", "skill.study_cost_positive", "study cost must be > 0");
      if (skill.follower_reward <= 0) {
        c.fail(path + ".follower_reward", "skill.follower_reward_positive", "follower reward must be > 0");
      }
    }
    if (wants_fair && space.trade_fair) {
      if (space.trade_fair->price <= 0) c.fail(path + ".price", "trade_fair.price_positive", "price must be > 0");
      if (space.trade_fair->followers_granted <= 0) {
        c.fail(path + ".followers_granted", "trade_fair.followers_positive", "followers granted must be > 0");
      }
    }
  }
  if (starts != 1) {
    c.fail("board.spaces", "board.unique_start",
           "board needs exactly one start space, found " + std::to_string(starts));
  }
  if (slushes != 1) {
    c.fail("board.spaces", "board.unique_slush",
           "board needs exactly one slush space, found " + std::to_string(slushes));
  }
  if (static_cast<int>(spaces.size()) < kMinBoardLength) {
    c.fail("board.spaces", "board.min_length",
           "board needs at least 12 spaces, found " + std::to_string(spaces.size()));
  }
  for (const auto category : kAllSkillCategories) {
    if (!covered.count(category)) {
      c.fail("board.spaces", "board.category_coverage",
             "no skill space for specialty '" + std::string(to_string(category)) + "'");
    }
  }

  check_ids(c, pack.bonus_deck, "bonus_deck");
  for (std::size_t i = 0; i < pack.bonus_deck.size(); ++i) {
    const auto& card = pack.bonus_deck[i];
    if (card.money_delta < 0 || card.follower_delta < 0 || card.money_delta + card.follower_delta <= 0) {
      c.fail(at("bonus_deck", i), "bonus.always_positive",
             "bonus cards are always positive: deltas must be >= 0 and not both zero");
    }
  }

  check_ids(c, pack.prob_solve_deck, "prob_solve_deck");
  const auto tags = pack.problem_tags();
  for (std::size_t i = 0; i < pack.prob_solve_deck.size(); ++i) {
    const auto& card = pack.prob_solve_deck[i];
    const auto path = at("prob_solve_deck", i);
    if (card.kind == ProbSolveKind::problem) {
      if (card.money_penalty < 0 || card.follower_penalty < 0) {
        c.fail(path, "problem.penalty_nonnegative", "penalties must be >= 0");
      } else if (card.money_penalty + card.follower_penalty <= 0) {
        c.fail(path, "problem.penalty_positive", "a problem must cost money or followers");
      }
      if (card.tag.empty()) c.fail(path + ".tag", "problem.tag_required", "problem cards need a tag");
    } else {
      if (card.counters_tags.empty()) {
        c.fail(path + ".counters_tags", "solution.counters_nonempty", "a solution must counter at least one tag");
      }
      for (std::size_t t = 0; t < card.counters_tags.size(); ++t) {
        if (std::find(tags.begin(), tags.end(), card.counters_tags[t]) == tags.end()) {
          c.fail(at(path + ".counters_tags", t), "ref.unknown_tag",
                 "no problem card carries tag '" + card.counters_tags[t] + "'");
        }
      }
    }
  }
}

template <class Cards>
void check_exclusions(Checker& c, const Cards& cards, const std::vector<std::string>& excluded,
                      const std::string& path) {
  for (std::size_t i = 0; i < excluded.size(); ++i) {
    const bool known = std::any_of(cards.begin(), cards.end(), [&](const auto& card) { return card.id == excluded[i]; });
    if (!known) c.fail(at(path, i), "ref.unknown_card", "no card with id '" + excluded[i] + "'");
  }
}

void check_game_of_growth(Checker& c, const ContentPack& pack) {
  std::set<StartupType> seen;
  bool duplicate = false;
  for (std::size_t i = 0; i < pack.startup_types.size(); ++i) {
    const auto& def = pack.startup_types[i];
    duplicate |= !seen.insert(def.type).second;
    const auto path = at("startup_types", i) + ".excluded_cards";
    check_exclusions(c, pack.event_deck, def.excluded_events, path + ".event");
    check_exclusions(c, pack.hack_deck, def.excluded_hacks, path + ".hack");
    check_exclusions(c, pack.employee_deck, def.excluded_employees, path + ".employee");
  }
  if (duplicate || seen.size() != kAllStartupTypes.size()) {
    c.fail("startup_types", "startup.types_exact", "startup_types must list tech, service and entertainment once each");
  }
  for (std::size_t i = 0; i < pack.startup_types.size(); ++i) {
    const auto type = pack.startup_types[i].type;
    const auto path = at("startup_types", i);
    if (pack.deck_for(type, DeckKind::hack).size() < static_cast<std::size_t>(kHandSize) ||
        pack.deck_for(type, DeckKind::event).empty() || pack.deck_for(type, DeckKind::employee).empty()) {
      c.fail(path, "startup.deck_too_small",
             "after exclusions a startup needs >= 3 hack cards and >= 1 event and employee card");
    }
  }

  check_ids(c, pack.event_deck, "event_deck");
  for (std::size_t i = 0; i < pack.event_deck.size(); ++i) {
    const auto& card = pack.event_deck[i];
    if (card.money_grant < 0) {
      c.fail(at("event_deck", i) + ".money_grant", "event.money_grant_nonnegative", "money grant must be >= 0");
    } else if (!card.has_effect()) {
      c.fail(at("event_deck", i), "event.has_effect", "an event card must change at least one modifier");
    }
  }

  check_ids(c, pack.hack_deck, "hack_deck");
  for (std::size_t i = 0; i < pack.hack_deck.size(); ++i) {
    const auto& card = pack.hack_deck[i];
    const auto path = at("hack_deck", i);
    if (card.success_threshold < 2 || card.success_threshold > 6) {
      c.fail(path + ".success_threshold", "hack.threshold_range",
             "success threshold must be 2..6 so the success chance lies in (0, 1]");
    }
    if (card.cost < 0) c.fail(path + ".cost", "hack.cost_nonnegative", "cost must be >= 0");
    if (card.follower_gain <= 0) c.fail(path + ".follower_gain", "hack.gain_positive", "follower gain must be > 0");
  }

  check_ids(c, pack.employee_deck, "employee_deck");
  for (std::size_t i = 0; i < pack.employee_deck.size(); ++i) {
    const auto& card = pack.employee_deck[i];
    const auto path = at("employee_deck", i);
    if (card.hire_cost < 0 || card.salary < 0) {
      c.fail(path, "employee.cost_nonnegative", "hire cost and salary must be >= 0");
    } else if (card.hire_cost == 0 && card.salary == 0) {
      c.fail(path, "employee.not_free", "an employee must cost something to hire or to keep");
    }
    const auto& ability = card.ability;
    const bool bad_amount = (ability.kind == AbilityKind::passive_followers && ability.amount <= 0) ||
                            (ability.kind == AbilityKind::hack_discount && (ability.amount < 1 || ability.amount > 100));
    if (bad_amount) {
      c.fail(path + ".ability.amount", "employee.ability_amount",
             "passive followers must be > 0; discounts must be 1..100 percent");
    }
  }
}

}  // namespace

std::vector<Violation> validate_pack(const ContentPack& pack) {
  Checker c;
  if (pack.schema_version != kSchemaVersion) {
    c.fail("schema_version", "schema.version", "unsupported schema_version");
  }
  if (pack.metadata.name.empty()) c.fail("metadata.name", "metadata.name_required", "pack needs a name");
  if (pack.game == Game::growthopoly) {
    check_growthopoly(c, pack);
  } else {
    check_game_of_growth(c, pack);
  }
  sort_violations(c.out);
  return c.out;
}

}  // namespace growthlab::pack
