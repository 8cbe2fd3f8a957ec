#pragma once

#include <vector>

#include "growthlab/pack/content_pack.hpp"
#include "growthlab/pack/violation.hpp"

namespace growthlab::pack {

/// Semantic checks over a structurally complete pack. Empty iff every pack
/// invariant holds; ordered by path.
std::vector<Violation> validate_pack(const ContentPack& pack);

}  // namespace growthlab::pack
