#pragma once

#include <string_view>

#include "growthlab/pack/content_pack.hpp"

namespace growthlab::pack {

/// Built-in pack for `game`, parsed once from the embedded copy of packs/*.json.
const ContentPack& default_pack(Game game);
PackPtr default_pack_ptr(Game game);

/// The embedded document text, byte-identical to the shipped file.
std::string_view default_pack_document(Game game);

}  // namespace growthlab::pack
