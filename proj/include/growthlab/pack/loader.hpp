#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "growthlab/pack/content_pack.hpp"
#include "growthlab/pack/violation.hpp"

namespace growthlab::pack {

struct LoadResult {
  std::optional<ContentPack> pack;  // present iff no error-severity violation
  std::vector<Violation> violations;

  bool ok() const { return pack.has_value(); }
};

/// Parses and validates a pack document. Reports every problem found rather
/// than stopping at the first one.
LoadResult load_pack(std::string_view document);
LoadResult load_pack(const nlohmann::json& document);

/// Canonical JSON form; reloading it yields an equal pack digest.
nlohmann::json serialize_pack(const ContentPack& pack);
std::string pack_digest(const ContentPack& pack);

}  // namespace growthlab::pack
