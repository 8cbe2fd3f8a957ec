#pragma once

#include <vector>

namespace growthlab {

/// Card indices into one pack deck. Top of the draw pile is draw.front().
struct DeckState {
  std::vector<int> draw;
  std::vector<int> discard;
  friend bool operator==(const DeckState&, const DeckState&) = default;
};

}  // namespace growthlab
