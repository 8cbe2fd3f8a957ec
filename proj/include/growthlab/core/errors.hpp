#pragma once

#include <stdexcept>
#include <string>

namespace growthlab {

/// Rejected request against an engine or service. `code` is a stable
/// machine-readable identifier such as "needs_opponents".
class GameError : public std::runtime_error {
 public:
  GameError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class IllegalMove : public GameError {
 public:
  explicit IllegalMove(const std::string& reason) : GameError("illegal_move", reason) {}
};

}  // namespace growthlab
