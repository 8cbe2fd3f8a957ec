#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace growthlab::pack {

enum class Severity { error, warning };

struct Violation {
  std::string path;  // e.g. "board.spaces[3].level"; "" is the document root
  std::string rule;  // stable identifier, e.g. "bonus.always_positive"
  std::string message;
  Severity severity = Severity::error;
};

struct RuleInfo {
  std::string_view id;
  Severity severity;
  std::string_view summary;
};

/// Every rule the loader and validator can report.
const std::vector<RuleInfo>& rule_catalog();

bool has_errors(const std::vector<Violation>& violations);

/// Sorts by path (array indices compared numerically), then rule, then message.
void sort_violations(std::vector<Violation>& violations);

/// "error   bonus_deck[0].money_delta  bonus.always_positive  bonus cards ..."
std::string render_text(const Violation& violation);
nlohmann::json render_json(const std::vector<Violation>& violations);

}  // namespace growthlab::pack
