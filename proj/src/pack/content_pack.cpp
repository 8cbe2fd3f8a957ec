#include "growthlab/pack/content_pack.hpp"

#include <algorithm>

namespace growthlab::pack {

namespace {

template <class Enum, std::size_t N>
std::optional<Enum> lookup(const std::array<std::string_view, N>& names, std::string_view name) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == name) return static_cast<Enum>(i);
  }
  return std::nullopt;
}

constexpr std::array<std::string_view, 2> kGameNames = {"growthopoly", "game_of_growth"};
constexpr std::array<std::string_view, 8> kCategoryNames = {
    "search_engine_optimization", "email_marketing",     "social_media_marketing",
    "public_relations",           "product_development", "display_advertising",
    "content_marketing",          "search_engine_marketing",
};
constexpr std::array<std::string_view, 6> kSpaceNames = {"skill",      "bonus", "trade_fair",
                                                         "prob_solve", "slush", "start"};
constexpr std::array<std::string_view, 2> kProbSolveNames = {"problem", "solution"};
constexpr std::array<std::string_view, 3> kAbilityNames = {"passive_followers", "hack_discount",
                                                           "reroll_once_per_turn"};
constexpr std::array<std::string_view, 3> kStartupNames = {"tech", "service", "entertainment"};

}  // namespace

int BoardDef::start_index() const {
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    if (spaces[i].kind == SpaceKind::start) return static_cast<int>(i);
  }
  return -1;
}

bool ProbSolveCardDef::counters(std::string_view problem_tag) const {
  return kind == ProbSolveKind::solution &&
         std::find(counters_tags.begin(), counters_tags.end(), problem_tag) != counters_tags.end();
}

bool EventCardDef::has_effect() const {
  return !hiring_cost_multiplier.is_one() || !hack_cost_multiplier.is_one() || salaries_waived ||
         !follower_gain_multiplier.is_one() || money_grant != 0;
}

const StartupTypeDef* ContentPack::startup(StartupType type) const {
  for (const auto& def : startup_types) {
    if (def.type == type) return &def;
  }
  return nullptr;
}

std::vector<int> ContentPack::deck_for(StartupType type, DeckKind deck) const {
  const auto* def = startup(type);
  auto build = [&](const auto& cards, const std::vector<std::string>* excluded) {
    std::vector<int> out;
    for (std::size_t i = 0; i < cards.size(); ++i) {
      if (excluded && std::find(excluded->begin(), excluded->end(), cards[i].id) != excluded->end()) {
        continue;
      }
      out.push_back(static_cast<int>(i));
    }
    return out;
  };
  switch (deck) {
    case DeckKind::event: return build(event_deck, def ? &def->excluded_events : nullptr);
    case DeckKind::hack: return build(hack_deck, def ? &def->excluded_hacks : nullptr);
    case DeckKind::employee: return build(employee_deck, def ? &def->excluded_employees : nullptr);
    case DeckKind::bonus: return build(bonus_deck, nullptr);
    case DeckKind::prob_solve: return build(prob_solve_deck, nullptr);
    case DeckKind::none: break;
  }
  return {};
}

std::vector<std::string> ContentPack::problem_tags() const {
  std::vector<std::string> tags;
  for (const auto& card : prob_solve_deck) {
    if (card.kind == ProbSolveKind::problem &&
        std::find(tags.begin(), tags.end(), card.tag) == tags.end()) {
      tags.push_back(card.tag);
    }
  }
  return tags;
}

std::string_view to_string(Game game) noexcept { return kGameNames[static_cast<std::size_t>(game)]; }
std::string_view to_string(SkillCategory category) noexcept {
  return kCategoryNames[static_cast<std::size_t>(category)];
}
std::string_view to_string(SpaceKind kind) noexcept { return kSpaceNames[static_cast<std::size_t>(kind)]; }
std::string_view to_string(ProbSolveKind kind) noexcept {
  return kProbSolveNames[static_cast<std::size_t>(kind)];
}
std::string_view to_string(AbilityKind kind) noexcept {
  return kAbilityNames[static_cast<std::size_t>(kind)];
}
std::string_view to_string(StartupType type) noexcept {
  return kStartupNames[static_cast<std::size_t>(type)];
}

std::optional<Game> game_from_string(std::string_view name) noexcept {
  return lookup<Game>(kGameNames, name);
}
std::optional<SkillCategory> skill_category_from_string(std::string_view name) noexcept {
  return lookup<SkillCategory>(kCategoryNames, name);
}
std::optional<SpaceKind> space_kind_from_string(std::string_view name) noexcept {
  return lookup<SpaceKind>(kSpaceNames, name);
}
std::optional<ProbSolveKind> prob_solve_kind_from_string(std::string_view name) noexcept {
  return lookup<ProbSolveKind>(kProbSolveNames, name);
}
std::optional<AbilityKind> ability_kind_from_string(std::string_view name) noexcept {
  return lookup<AbilityKind>(kAbilityNames, name);
}
std::optional<StartupType> startup_type_from_string(std::string_view name) noexcept {
  return lookup<StartupType>(kStartupNames, name);
}

}  // namespace growthlab::pack
