#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "growthlab/core/event.hpp"
#include "growthlab/core/rational.hpp"
#include "growthlab/core/resources.hpp"

namespace growthlab::pack {

inline constexpr int kSchemaVersion = 1;

enum class Game { growthopoly, game_of_growth };

enum class SkillCategory {
  search_engine_optimization,
  email_marketing,
  social_media_marketing,
  public_relations,
  product_development,
  display_advertising,
  content_marketing,
  search_engine_marketing,
};

inline constexpr std::array<SkillCategory, 8> kAllSkillCategories = {
    SkillCategory::search_engine_optimization, SkillCategory::email_marketing,
    SkillCategory::social_media_marketing,     SkillCategory::public_relations,
    SkillCategory::product_development,        SkillCategory::display_advertising,
    SkillCategory::content_marketing,          SkillCategory::search_engine_marketing,
};

enum class SpaceKind { skill, bonus, trade_fair, prob_solve, slush, start };

struct SkillFields {
  SkillCategory category = SkillCategory::search_engine_optimization;
  int level = 1;
  Money study_cost = 0;
  Followers follower_reward = 0;
  friend bool operator==(const SkillFields&, const SkillFields&) = default;
};

struct TradeFairFields {
  Money price = 0;
  Followers followers_granted = 0;
  friend bool operator==(const TradeFairFields&, const TradeFairFields&) = default;
};

struct SpaceDef {
  SpaceKind kind = SpaceKind::bonus;
  std::string name;
  std::optional<SkillFields> skill;           // iff kind == skill
  std::optional<TradeFairFields> trade_fair;  // iff kind == trade_fair
  friend bool operator==(const SpaceDef&, const SpaceDef&) = default;
};

struct BoardDef {
  std::vector<SpaceDef> spaces;

  /// Index of the first start space, or -1.
  int start_index() const;
  int size() const { return static_cast<int>(spaces.size()); }
};

struct BonusCardDef {
  std::string id;
  std::string label;
  Money money_delta = 0;
  Followers follower_delta = 0;
};

enum class ProbSolveKind { problem, solution };

struct ProbSolveCardDef {
  std::string id;
  std::string label;
  ProbSolveKind kind = ProbSolveKind::problem;
  Money money_penalty = 0;
  Followers follower_penalty = 0;
  std::string tag;                       // problem only
  std::vector<std::string> counters_tags;  // solution only

  bool counters(std::string_view problem_tag) const;
};

struct HackCardDef {
  std::string id;
  std::string label;
  Money cost = 0;
  int success_threshold = 4;
  Followers follower_gain = 0;
};

struct EventCardDef {
  std::string id;
  std::string label;
  Ratio hiring_cost_multiplier = Ratio::one();
  Ratio hack_cost_multiplier = Ratio::one();
  bool salaries_waived = false;
  Ratio follower_gain_multiplier = Ratio::one();
  Money money_grant = 0;

  bool has_effect() const;
};

enum class AbilityKind { passive_followers, hack_discount, reroll_once_per_turn };

struct EmployeeAbility {
  AbilityKind kind = AbilityKind::passive_followers;
  int amount = 0;  // followers per turn, or discount percent; unused for rerolls
};

struct EmployeeCardDef {
  std::string id;
  std::string label;
  Money hire_cost = 0;
  Money salary = 0;
  EmployeeAbility ability;
};

enum class StartupType { tech, service, entertainment };
inline constexpr std::array<StartupType, 3> kAllStartupTypes = {
    StartupType::tech, StartupType::service, StartupType::entertainment};

struct StartupTypeDef {
  StartupType type = StartupType::tech;
  std::string description;
  std::vector<std::string> excluded_events;
  std::vector<std::string> excluded_hacks;
  std::vector<std::string> excluded_employees;
};

struct GrowthopolyRules {
  Money starting_money = 0;
  Followers starting_followers = 0;
  Resources start_reward;
  int slush_success_threshold = 4;
  Followers slush_followers = 0;
  std::vector<Money> trade_money_steps;
  int max_trade_proposals_per_turn = 0;
};

struct Metadata {
  std::string name;
  std::string version;
  std::string description;
};

/// Board and decks for one game. Only the sections of `game` are meaningful.
struct ContentPack {
  int schema_version = kSchemaVersion;
  Game game = Game::growthopoly;
  Metadata metadata;

  GrowthopolyRules rules;
  BoardDef board;
  std::vector<BonusCardDef> bonus_deck;
  std::vector<ProbSolveCardDef> prob_solve_deck;

  std::vector<StartupTypeDef> startup_types;
  std::vector<EventCardDef> event_deck;
  std::vector<HackCardDef> hack_deck;
  std::vector<EmployeeCardDef> employee_deck;

  const StartupTypeDef* startup(StartupType type) const;
  /// Card indices of `deck` available to a startup type, in pack order.
  std::vector<int> deck_for(StartupType type, DeckKind deck) const;
  /// Distinct problem tags in deck order.
  std::vector<std::string> problem_tags() const;
};

using PackPtr = std::shared_ptr<const ContentPack>;

std::string_view to_string(Game game) noexcept;
std::string_view to_string(SkillCategory category) noexcept;
std::string_view to_string(SpaceKind kind) noexcept;
std::string_view to_string(ProbSolveKind kind) noexcept;
std::string_view to_string(AbilityKind kind) noexcept;
std::string_view to_string(StartupType type) noexcept;

std::optional<Game> game_from_string(std::string_view name) noexcept;
std::optional<SkillCategory> skill_category_from_string(std::string_view name) noexcept;
std::optional<SpaceKind> space_kind_from_string(std::string_view name) noexcept;
std::optional<ProbSolveKind> prob_solve_kind_from_string(std::string_view name) noexcept;
std::optional<AbilityKind> ability_kind_from_string(std::string_view name) noexcept;
std::optional<StartupType> startup_type_from_string(std::string_view name) noexcept;

}  // namespace growthlab::pack
