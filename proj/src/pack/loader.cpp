#include "growthlab/pack/loader.hpp"

#include <algorithm>
#include <initializer_list>

#include "growthlab/core/digest.hpp"
#include "growthlab/pack/validator.hpp"

namespace growthlab::pack {

using nlohmann::json;

namespace {

std::string join(const std::string& path, std::string_view key) {
  if (path.empty()) return std::string(key);
  return path + "." + std::string(key);
}

std::string index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::string_view type_name(const json& value) {
  if (value.is_object()) return "object";
  if (value.is_array()) return "array";
  if (value.is_string()) return "string";
  if (value.is_boolean()) return "boolean";
  if (value.is_number_integer()) return "integer";
  if (value.is_number()) return "number";
  return "null";
}

// Walks the document, recording structural violations as it goes.
class Reader {
 public:
  explicit Reader(std::vector<Violation>& out) : out_(out) {}

  void error(const std::string& path, std::string rule, std::string message) {
    out_.push_back({path, std::move(rule), std::move(message), Severity::error});
  }

  void warn(const std::string& path, std::string rule, std::string message) {
    out_.push_back({path, std::move(rule), std::move(message), Severity::warning});
  }

  void check_unknown(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : obj.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        warn(join(path, key), "schema.unknown_field", "unknown field '" + key + "' is ignored");
      }
    }
  }

  const json* field(const json& obj, const std::string& path, std::string_view key, bool required) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) error(join(path, key), "schema.missing_field", "required field is missing");
      return nullptr;
    }
    return &*it;
  }

  const json* object(const json& obj, const std::string& path, std::string_view key, bool required = true) {
    const json* value = field(obj, path, key, required);
    if (value && !value->is_object()) {
      wrong_type(join(path, key), "object", *value);
      return nullptr;
    }
    return value;
  }

  const json* array(const json& obj, const std::string& path, std::string_view key, bool required = true) {
    const json* value = field(obj, path, key, required);
    if (value && !value->is_array()) {
      wrong_type(join(path, key), "array", *value);
      return nullptr;
    }
    return value;
  }

  std::optional<std::int64_t> integer(const json& obj, const std::string& path, std::string_view key,
                                      bool required = true) {
    const json* value = field(obj, path, key, required);
    if (!value) return std::nullopt;
    if (!value->is_number_integer()) {
      wrong_type(join(path, key), "integer", *value);
      return std::nullopt;
    }
    return value->get<std::int64_t>();
  }

  std::optional<std::string> text(const json& obj, const std::string& path, std::string_view key,
                                  bool required = true) {
    const json* value = field(obj, path, key, required);
    if (!value) return std::nullopt;
    if (!value->is_string()) {
      wrong_type(join(path, key), "string", *value);
      return std::nullopt;
    }
    return value->get<std::string>();
  }

  std::optional<bool> boolean(const json& obj, const std::string& path, std::string_view key) {
    const json* value = field(obj, path, key, false);
    if (!value) return std::nullopt;
    if (!value->is_boolean()) {
      wrong_type(join(path, key), "boolean", *value);
      return std::nullopt;
    }
    return value->get<bool>();
  }

  std::vector<std::string> strings(const json& obj, const std::string& path, std::string_view key,
                                   bool required) {
    std::vector<std::string> out;
    const json* list = array(obj, path, key, required);
    if (!list) return out;
    for (std::size_t i = 0; i < list->size(); ++i) {
      const auto& item = (*list)[i];
      if (!item.is_string()) {
        wrong_type(index(join(path, key), i), "string", item);
        continue;
      }
      out.push_back(item.get<std::string>());
    }
    return out;
  }

  std::optional<Ratio> ratio(const json& obj, const std::string& path, std::string_view key,
                             std::string_view rule) {
    const json* value = field(obj, path, key, false);
    if (!value) return std::nullopt;
    std::optional<Ratio> parsed;
    if (value->is_number_integer()) {
      const auto n = value->get<std::int64_t>();
      if (n >= 0) parsed = Ratio{n, 1};
    } else if (value->is_number()) {
      const auto d = value->get<double>();
      if (d >= 0) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", d);
        parsed = Ratio::parse(buf);
      }
    } else if (value->is_string()) {
      parsed = Ratio::parse(value->get<std::string>());
    } else {
      wrong_type(join(path, key), "ratio", *value);
      return std::nullopt;
    }
    if (!parsed) {
      error(join(path, key), std::string(rule), "multiplier must be a nonnegative ratio such as \"1/2\"");
    }
    return parsed;
  }

  template <class Enum, class Parse>
  std::optional<Enum> enumeration(const json& obj, const std::string& path, std::string_view key, Parse parse) {
    const auto name = text(obj, path, key);
    if (!name) return std::nullopt;
    const auto value = parse(*name);
    if (!value) error(join(path, key), "schema.unknown_enum", "unknown value '" + *name + "'");
    return value;
  }

  void wrong_type(const std::string& path, std::string_view expected, const json& got) {
    error(path, "schema.wrong_type",
          "expected " + std::string(expected) + ", got " + std::string(type_name(got)));
  }

 private:
  std::vector<Violation>& out_;
};

void read_metadata(Reader& r, const json& doc, Metadata& meta) {
  const json* obj = r.object(doc, "", "metadata");
  if (!obj) return;
  r.check_unknown(*obj, "metadata", {"name", "version", "description"});
  meta.name = r.text(*obj, "metadata", "name").value_or("");
  meta.version = r.text(*obj, "metadata", "version").value_or("");
  meta.description = r.text(*obj, "metadata", "description", false).value_or("");
}

void read_rules(Reader& r, const json& doc, GrowthopolyRules& rules) {
  const json* obj = r.object(doc, "", "rules");
  if (!obj) return;
  const std::string path = "rules";
  r.check_unknown(*obj, path, {"starting_money", "starting_followers", "start_reward", "slush", "trade"});
  rules.starting_money = r.integer(*obj, path, "starting_money").value_or(0);
  rules.starting_followers = r.integer(*obj, path, "starting_followers", false).value_or(0);
  if (const json* reward = r.object(*obj, path, "start_reward")) {
    const auto p = join(path, "start_reward");
    r.check_unknown(*reward, p, {"money", "followers"});
    rules.start_reward.money = r.integer(*reward, p, "money").value_or(0);
    rules.start_reward.followers = r.integer(*reward, p, "followers").value_or(0);
  }
  if (const json* slush = r.object(*obj, path, "slush")) {
    const auto p = join(path, "slush");
    r.check_unknown(*slush, p, {"success_threshold", "followers_per_success"});
    rules.slush_success_threshold = static_cast<int>(r.integer(*slush, p, "success_threshold").value_or(4));
    rules.slush_followers = r.integer(*slush, p, "followers_per_success").value_or(0);
  }
  if (const json* trade = r.object(*obj, path, "trade")) {
    const auto p = join(path, "trade");
    r.check_unknown(*trade, p, {"money_steps", "max_proposals_per_turn"});
    if (const json* steps = r.array(*trade, p, "money_steps")) {
      for (std::size_t i = 0; i < steps->size(); ++i) {
        const auto& step = (*steps)[i];
        if (!step.is_number_integer()) {
          r.wrong_type(index(join(p, "money_steps"), i), "integer", step);
          continue;
        }
        rules.trade_money_steps.push_back(step.get<Money>());
      }
    }
    rules.max_trade_proposals_per_turn = static_cast<int>(r.integer(*trade, p, "max_proposals_per_turn").value_or(0));
  }
}

void read_space(Reader& r, const json& obj, const std::string& path, SpaceDef& space) {
  r.check_unknown(obj, path,
                  {"kind", "name", "category", "level", "study_cost", "follower_reward", "price", "followers_granted"});
  space.kind = r.enumeration<SpaceKind>(obj, path, "kind", space_kind_from_string).value_or(SpaceKind::bonus);
  space.name = r.text(obj, path, "name", false).value_or("");
  if (obj.contains("category") || obj.contains("level") || obj.contains("study_cost") ||
      obj.contains("follower_reward")) {
    SkillFields skill;
    skill.category = r.enumeration<SkillCategory>(obj, path, "category", skill_category_from_string)
                         .value_or(SkillCategory::search_engine_optimization);
    skill.level = static_cast<int>(r.integer(obj, path, "level").value_or(1));
    skill.study_cost = r.integer(obj, path, "study_cost").value_or(0);
    skill.follower_reward = r.integer(obj, path, "follower_reward").value_or(0);
    space.skill = skill;
  }
  if (obj.contains("price") || obj.contains("followers_granted")) {
    TradeFairFields fair;
    fair.price = r.integer(obj, path, "price").value_or(0);
    fair.followers_granted = r.integer(obj, path, "followers_granted").value_or(0);
    space.trade_fair = fair;
  }
}

void read_board(Reader& r, const json& doc, BoardDef& board) {
  const json* obj = r.object(doc, "", "board");
  if (!obj) return;
  r.check_unknown(*obj, "board", {"spaces"});
  const json* spaces = r.array(*obj, "board", "spaces");
  if (!spaces) return;
  for (std::size_t i = 0; i < spaces->size(); ++i) {
    const auto path = index("board.spaces", i);
    const auto& item = (*spaces)[i];
    if (!item.is_object()) {
      r.wrong_type(path, "object", item);
      continue;
    }
    SpaceDef space;
    read_space(r, item, path, space);
    board.spaces.push_back(std::move(space));
  }
}

// Calls `read(item, path)` for each object element of an array-valued section.
template <class Fn>
void for_each_card(Reader& r, const json& doc, std::string_view key, Fn read) {
  const json* list = r.array(doc, "", key);
  if (!list) return;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const auto path = index(std::string(key), i);
    const auto& item = (*list)[i];
    if (!item.is_object()) {
      r.wrong_type(path, "object", item);
      continue;
    }
    read(item, path);
  }
}

void read_growthopoly(Reader& r, const json& doc, ContentPack& pack) {
  read_rules(r, doc, pack.rules);
  read_board(r, doc, pack.board);
  for_each_card(r, doc, "bonus_deck", [&](const json& item, const std::string& path) {
    r.check_unknown(item, path, {"id", "label", "money_delta", "follower_delta"});
    BonusCardDef card;
    card.id = r.text(item, path, "id").value_or("");
    card.label = r.text(item, path, "label").value_or("");
    card.money_delta = r.integer(item, path, "money_delta", false).value_or(0);
    card.follower_delta = r.integer(item, path, "follower_delta", false).value_or(0);
    pack.bonus_deck.push_back(std::move(card));
  });
  for_each_card(r, doc, "prob_solve_deck", [&](const json& item, const std::string& path) {
    r.check_unknown(item, path,
                    {"id", "label", "kind", "money_penalty", "follower_penalty", "tag", "counters_tags"});
    ProbSolveCardDef card;
    card.id = r.text(item, path, "id").value_or("");
    card.label = r.text(item, path, "label").value_or("");
    card.kind = r.enumeration<ProbSolveKind>(item, path, "kind", prob_solve_kind_from_string)
                    .value_or(ProbSolveKind::problem);
    if (card.kind == ProbSolveKind::problem) {
      card.money_penalty = r.integer(item, path, "money_penalty", false).value_or(0);
      card.follower_penalty = r.integer(item, path, "follower_penalty", false).value_or(0);
      card.tag = r.text(item, path, "tag").value_or("");
      if (item.contains("counters_tags")) {
        r.error(join(path, "counters_tags"), "card.kind_fields", "problem cards cannot counter tags");
      }
    } else {
      card.counters_tags = r.strings(item, path, "counters_tags", true);
      for (const auto* key : {"money_penalty", "follower_penalty", "tag"}) {
        if (item.contains(key)) {
          r.error(join(path, key), "card.kind_fields", "solution cards carry no problem fields");
        }
      }
    }
    pack.prob_solve_deck.push_back(std::move(card));
  });
}

void read_game_of_growth(Reader& r, const json& doc, ContentPack& pack) {
  for_each_card(r, doc, "startup_types", [&](const json& item, const std::string& path) {
    r.check_unknown(item, path, {"type", "description", "excluded_cards"});
    StartupTypeDef def;
    def.type = r.enumeration<StartupType>(item, path, "type", startup_type_from_string).value_or(StartupType::tech);
    def.description = r.text(item, path, "description", false).value_or("");
    if (const json* excluded = r.object(item, path, "excluded_cards", false)) {
      const auto p = join(path, "excluded_cards");
      r.check_unknown(*excluded, p, {"event", "hack", "employee"});
      def.excluded_events = r.strings(*excluded, p, "event", false);
      def.excluded_hacks = r.strings(*excluded, p, "hack", false);
      def.excluded_employees = r.strings(*excluded, p, "employee", false);
    }
    pack.startup_types.push_back(std::move(def));
  });
  for_each_card(r, doc, "event_deck", [&](const json& item, const std::string& path) {
    r.check_unknown(item, path,
                    {"id", "label", "hiring_cost_multiplier", "hack_cost_multiplier", "salaries_waived",
                     "follower_gain_multiplier", "money_grant"});
    EventCardDef card;
    card.id = r.text(item, path, "id").value_or("");
    card.label = r.text(item, path, "label").value_or("");
    constexpr std::string_view rule = "event.multiplier_nonnegative";
    card.hiring_cost_multiplier = r.ratio(item, path, "hiring_cost_multiplier", rule).value_or(Ratio::one());
    card.hack_cost_multiplier = r.ratio(item, path, "hack_cost_multiplier", rule).value_or(Ratio::one());
    card.follower_gain_multiplier = r.ratio(item, path, "follower_gain_multiplier", rule).value_or(Ratio::one());
    card.salaries_waived = r.boolean(item, path, "salaries_waived").value_or(false);
    card.money_grant = r.integer(item, path, "money_grant", false).value_or(0);
    pack.event_deck.push_back(std::move(card));
  });
  for_each_card(r, doc, "hack_deck", [&](const json& item, const std::string& path) {
    r.check_unknown(item, path, {"id", "label", "cost", "success_threshold", "follower_gain"});
    HackCardDef card;
    card.id = r.text(item, path, "id").value_or("");
    card.label = r.text(item, path, "label").value_or("");
    card.cost = r.integer(item, path, "cost").value_or(0);
    card.success_threshold = static_cast<int>(r.integer(item, path, "success_threshold").value_or(4));
    card.follower_gain = r.integer(item, path, "follower_gain").value_or(0);
    pack.hack_deck.push_back(std::move(card));
  });
  for_each_card(r, doc, "employee_deck", [&](const json& item, const std::string& path) {
    r.check_unknown(item, path, {"id", "label", "hire_cost", "salary", "ability"});
    EmployeeCardDef card;
    card.id = r.text(item, path, "id").value_or("");
    card.label = r.text(item, path, "label").value_or("");
    card.hire_cost = r.integer(item, path, "hire_cost").value_or(0);
    card.salary = r.integer(item, path, "salary").value_or(0);
    if (const json* ability = r.object(item, path, "ability")) {
      const auto p = join(path, "ability");
      r.check_unknown(*ability, p, {"kind", "amount"});
      card.ability.kind = r.enumeration<AbilityKind>(*ability, p, "kind", ability_kind_from_string)
                              .value_or(AbilityKind::passive_followers);
      const bool needs_amount = card.ability.kind != AbilityKind::reroll_once_per_turn;
      card.ability.amount = static_cast<int>(r.integer(*ability, p, "amount", needs_amount).value_or(0));
    }
    pack.employee_deck.push_back(std::move(card));
  });
}

std::pair<int, int> line_and_column(std::string_view document, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < document.size() && i + 1 < byte; ++i) {
    if (document[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

LoadResult load_pack(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_and_column(document, e.byte);
    LoadResult result;
    result.violations.push_back({"", "syntax.malformed",
                                 "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                     e.what(),
                                 Severity::error});
    return result;
  }
  return load_pack(doc);
}

LoadResult load_pack(const json& doc) {
  LoadResult result;
  auto& out = result.violations;
  Reader r(out);
  if (!doc.is_object()) {
    r.wrong_type("", "object", doc);
    return result;
  }

  ContentPack pack;
  if (const auto version = r.integer(doc, "", "schema_version")) {
    pack.schema_version = static_cast<int>(*version);
    if (*version != kSchemaVersion) {
      r.error("schema_version", "schema.version",
              "unsupported schema_version " + std::to_string(*version) + " (expected 1)");
    }
  }
  std::optional<Game> game;
  if (const auto name = r.text(doc, "", "game")) {
    game = game_from_string(*name);
    if (!game) r.error("game", "schema.unknown_game", "unknown game '" + *name + "'");
  }
  read_metadata(r, doc, pack.metadata);

  if (game) {
    pack.game = *game;
    if (*game == Game::growthopoly) {
      r.check_unknown(doc, "", {"schema_version", "game", "metadata", "rules", "board", "bonus_deck",
                                "prob_solve_deck"});
      read_growthopoly(r, doc, pack);
    } else {
      r.check_unknown(doc, "", {"schema_version", "game", "metadata", "startup_types", "event_deck",
                                "hack_deck", "employee_deck"});
      read_game_of_growth(r, doc, pack);
    }
  }

  if (!has_errors(out)) {
    auto semantic = validate_pack(pack);
    out.insert(out.end(), semantic.begin(), semantic.end());
  }
  sort_violations(out);
  if (!has_errors(out)) result.pack = std::move(pack);
  return result;
}

json serialize_pack(const ContentPack& pack) {
  json doc;
  doc["schema_version"] = pack.schema_version;
  doc["game"] = to_string(pack.game);
  doc["metadata"] = {{"name", pack.metadata.name}, {"version", pack.metadata.version}};
  if (!pack.metadata.description.empty()) doc["metadata"]["description"] = pack.metadata.description;

  if (pack.game == Game::growthopoly) {
    const auto& rules = pack.rules;
    doc["rules"] = {
        {"starting_money", rules.starting_money},
        {"starting_followers", rules.starting_followers},
        {"start_reward", {{"money", rules.start_reward.money}, {"followers", rules.start_reward.followers}}},
        {"slush",
         {{"success_threshold", rules.slush_success_threshold}, {"followers_per_success", rules.slush_followers}}},
        {"trade",
         {{"money_steps", rules.trade_money_steps}, {"max_proposals_per_turn", rules.max_trade_proposals_per_turn}}},
    };
    auto spaces = json::array();
    for (const auto& space : pack.board.spaces) {
      json s = {{"kind", to_string(space.kind)}};
      if (!space.name.empty()) s["name"] = space.name;
      if (space.skill) {
        s["category"] = to_string(space.skill->category);
        s["level"] = space.skill->level;
        s["study_cost"] = space.skill->study_cost;
        s["follower_reward"] = space.skill->follower_reward;
      }
      if (space.trade_fair) {
        s["price"] = space.trade_fair->price;
        s["followers_granted"] = space.trade_fair->followers_granted;
      }
      spaces.push_back(std::move(s));
    }
    doc["board"] = {{"spaces", std::move(spaces)}};
    auto bonus = json::array();
    for (const auto& card : pack.bonus_deck) {
      bonus.push_back({{"id", card.id},
                       {"label", card.label},
                       {"money_delta", card.money_delta},
                       {"follower_delta", card.follower_delta}});
    }
    doc["bonus_deck"] = std::move(bonus);
    auto prob = json::array();
    for (const auto& card : pack.prob_solve_deck) {
      json c = {{"id", card.id}, {"label", card.label}, {"kind", to_string(card.kind)}};
      if (card.kind == ProbSolveKind::problem) {
        c["money_penalty"] = card.money_penalty;
        c["follower_penalty"] = card.follower_penalty;
        c["tag"] = card.tag;
      } else {
        c["counters_tags"] = card.counters_tags;
      }
      prob.push_back(std::move(c));
    }
    doc["prob_solve_deck"] = std::move(prob);
    return doc;
  }

  auto types = json::array();
  for (const auto& def : pack.startup_types) {
    json t = {{"type", to_string(def.type)}};
    if (!def.description.empty()) t["description"] = def.description;
    t["excluded_cards"] = {
        {"event", def.excluded_events}, {"hack", def.excluded_hacks}, {"employee", def.excluded_employees}};
    types.push_back(std::move(t));
  }
  doc["startup_types"] = std::move(types);
  auto events = json::array();
  for (const auto& card : pack.event_deck) {
    events.push_back({{"id", card.id},
                      {"label", card.label},
                      {"hiring_cost_multiplier", card.hiring_cost_multiplier.to_string()},
                      {"hack_cost_multiplier", card.hack_cost_multiplier.to_string()},
                      {"salaries_waived", card.salaries_waived},
                      {"follower_gain_multiplier", card.follower_gain_multiplier.to_string()},
                      {"money_grant", card.money_grant}});
  }
  doc["event_deck"] = std::move(events);
  auto hacks = json::array();
  for (const auto& card : pack.hack_deck) {
    hacks.push_back({{"id", card.id},
                     {"label", card.label},
                     {"cost", card.cost},
                     {"success_threshold", card.success_threshold},
                     {"follower_gain", card.follower_gain}});
  }
  doc["hack_deck"] = std::move(hacks);
  auto employees = json::array();
  for (const auto& card : pack.employee_deck) {
    json ability = {{"kind", to_string(card.ability.kind)}};
    if (card.ability.kind != AbilityKind::reroll_once_per_turn) ability["amount"] = card.ability.amount;
    employees.push_back({{"id", card.id},
                         {"label", card.label},
                         {"hire_cost", card.hire_cost},
                         {"salary", card.salary},
                         {"ability", std::move(ability)}});
  }
  doc["employee_deck"] = std::move(employees);
  return doc;
}

std::string pack_digest(const ContentPack& pack) {
  return digest_hex(fnv1a64(serialize_pack(pack).dump()));
}

}  // namespace growthlab::pack
