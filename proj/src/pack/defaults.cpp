#include "growthlab/pack/defaults.hpp"

#include <stdexcept>

#include "embedded_packs.hpp"
#include "growthlab/pack/loader.hpp"

namespace growthlab::pack {

namespace {

PackPtr load_embedded(Game game) {
  auto result = load_pack(default_pack_document(game));
  if (!result.ok()) throw std::logic_error("embedded default pack does not validate");
  return std::make_shared<const ContentPack>(std::move(*result.pack));
}

}  // namespace

std::string_view default_pack_document(Game game) {
  return game == Game::growthopoly ? embedded::kGrowthopolyPack : embedded::kGameOfGrowthPack;
}

PackPtr default_pack_ptr(Game game) {
  static const PackPtr growthopoly = load_embedded(Game::growthopoly);
  static const PackPtr game_of_growth = load_embedded(Game::game_of_growth);
  return game == Game::growthopoly ? growthopoly : game_of_growth;
}

const ContentPack& default_pack(Game game) { return *default_pack_ptr(game); }

}  // namespace growthlab::pack
