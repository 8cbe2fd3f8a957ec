#include "growthlab/pack/violation.hpp"

#include <algorithm>
#include <cctype>

namespace growthlab::pack {

namespace {

// Splits "a.b[12].c" into comparable tokens; runs of digits compare by value.
int compare_paths(const std::string& a, const std::string& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ei = i;
      std::size_t ej = j;
      while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
      while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
      const auto na = std::stoull(a.substr(i, ei - i));
      const auto nb = std::stoull(b.substr(j, ej - j));
      if (na != nb) return na < nb ? -1 : 1;
      i = ei;
      j = ej;
      continue;
    }
    if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]) ? -1 : 1;
    ++i;
    ++j;
  }
  if (i == a.size() && j == b.size()) return 0;
  return i == a.size() ? -1 : 1;
}

}  // namespace

const std::vector<RuleInfo>& rule_catalog() {
  static const std::vector<RuleInfo> rules = {
      {"syntax.malformed", Severity::error, "document is not valid JSON"},
      {"schema.version", Severity::error, "schema_version must be 1"},
      {"schema.unknown_game", Severity::error, "game must be growthopoly or game_of_growth"},
      {"schema.missing_field", Severity::error, "a required field is absent"},
      {"schema.wrong_type", Severity::error, "a field has the wrong JSON type"},
      {"schema.unknown_enum", Severity::error, "an enumerated field has an unknown value"},
      {"schema.unknown_field", Severity::warning, "a field the format does not define"},
      {"metadata.name_required", Severity::error, "metadata.name must be non-empty"},
      {"rules.starting_resources_nonnegative", Severity::error, "starting money and followers >= 0"},
      {"rules.start_reward_nonnegative", Severity::error, "start reward >= 0"},
      {"rules.slush_threshold_range", Severity::error, "slush threshold is a die face 1..6"},
      {"rules.slush_followers_positive", Severity::error, "slush followers per success > 0"},
      {"rules.trade_steps_positive", Severity::error, "every trade money step > 0"},
      {"rules.trade_limit_nonnegative", Severity::error, "trade proposals per turn >= 0"},
      {"space.kind_fields", Severity::error, "skill and trade fair fields appear exactly on their space kinds"},
      {"skill.level_range", Severity::error, "skill level is 1, 2 or 3"},
      {"skill.study_cost_positive", Severity::error, "study cost > 0"},
      {"skill.follower_reward_positive", Severity::error, "follower reward > 0"},
      {"trade_fair.price_positive", Severity::error, "trade fair price > 0"},
      {"trade_fair.followers_positive", Severity::error, "trade fair followers > 0"},
      {"board.unique_start", Severity::error, "exactly one start space"},
      {"board.unique_slush", Severity::error, "exactly one slush space"},
      {"board.min_length", Severity::error, "at least 12 spaces"},
      {"board.category_coverage", Severity::error, "every skill category has a space"},
      {"deck.nonempty", Severity::error, "every deck has a card"},
      {"deck.duplicate_id", Severity::error, "card ids are unique within a deck"},
      {"bonus.always_positive", Severity::error, "bonus deltas >= 0 and not both zero"},
      {"card.kind_fields", Severity::error, "problem and solution fields stay on their own kind"},
      {"problem.penalty_nonnegative", Severity::error, "problem penalties >= 0"},
      {"problem.penalty_positive", Severity::error, "a problem costs money or followers"},
      {"problem.tag_required", Severity::error, "problems carry a tag"},
      {"solution.counters_nonempty", Severity::error, "solutions counter at least one tag"},
      {"ref.unknown_tag", Severity::error, "solutions counter only tags some problem carries"},
      {"ref.unknown_card", Severity::error, "startup exclusions name existing cards"},
      {"startup.types_exact", Severity::error, "tech, service and entertainment each defined once"},
      {"startup.deck_too_small", Severity::error, "after exclusions a startup keeps 3 hacks, an event and an employee"},
      {"event.multiplier_nonnegative", Severity::error, "event multipliers >= 0"},
      {"event.money_grant_nonnegative", Severity::error, "money grant >= 0"},
      {"event.has_effect", Severity::error, "an event changes something"},
      {"hack.threshold_range", Severity::error, "hack threshold is 2..6"},
      {"hack.cost_nonnegative", Severity::error, "hack cost >= 0"},
      {"hack.gain_positive", Severity::error, "hack follower gain > 0"},
      {"employee.cost_nonnegative", Severity::error, "hire cost and salary >= 0"},
      {"employee.not_free", Severity::error, "hire cost or salary > 0"},
      {"employee.ability_amount", Severity::error, "ability amount fits its kind"},
  };
  return rules;
}

bool has_errors(const std::vector<Violation>& violations) {
  return std::any_of(violations.begin(), violations.end(),
                     [](const Violation& v) { return v.severity == Severity::error; });
}

void sort_violations(std::vector<Violation>& violations) {
  std::stable_sort(violations.begin(), violations.end(), [](const Violation& x, const Violation& y) {
    if (const int c = compare_paths(x.path, y.path); c != 0) return c < 0;
    if (x.rule != y.rule) return x.rule < y.rule;
    return x.message < y.message;
  });
}

std::string render_text(const Violation& violation) {
  std::string out = violation.severity == Severity::error ? "error" : "warning";
  out += ' ';
  out += violation.path.empty() ? "(root)" : violation.path;
  out += ' ';
  out += violation.rule;
  out += ": ";
  out += violation.message;
  return out;
}

nlohmann::json render_json(const std::vector<Violation>& violations) {
  auto list = nlohmann::json::array();
  for (const auto& v : violations) {
    list.push_back({{"path", v.path},
                    {"rule", v.rule},
                    {"message", v.message},
                    {"severity", v.severity == Severity::error ? "error" : "warning"}});
  }
  return list;
}

}  // namespace growthlab::pack
