#pragma once

#include <optional>
#include <string_view>

namespace growthlab {

enum class OutcomeStatus { ongoing, won, lost };
enum class LossReason { turns_exhausted, bankrupt };

struct GameOutcome {
  OutcomeStatus status = OutcomeStatus::ongoing;
  std::optional<int> winner;  // player index; 0 when a Game of Growth is won
  int turns_elapsed = 0;
  std::optional<LossReason> loss_reason;

  bool finished() const noexcept { return status != OutcomeStatus::ongoing; }
  friend bool operator==(const GameOutcome&, const GameOutcome&) = default;
};

std::string_view to_string(OutcomeStatus status) noexcept;
std::string_view to_string(LossReason reason) noexcept;

}  // namespace growthlab
