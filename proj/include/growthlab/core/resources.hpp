#pragma once

#include <cstdint>

namespace growthlab {

using Money = std::int64_t;
using Followers = std::int64_t;

/// Win threshold shared by both games.
inline constexpr Followers kWinFollowers = 5000;

struct Resources {
  Money money = 0;
  Followers followers = 0;

  friend bool operator==(const Resources&, const Resources&) = default;
};

}  // namespace growthlab
