#include <fstream>
#include <ostream>
#include <sstream>

#include "commands.hpp"
#include "growthlab/pack/defaults.hpp"
#include "growthlab/pack/loader.hpp"

namespace growthlab::cli {

int run_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err) {
  std::ifstream in(options.path, std::ios::binary);
  if (!in) {
    err << "cannot read " << options.path << '\n';
    return kExitUsage;
  }
  std::stringstream text;
  text << in.rdbuf();
  if (in.bad()) {
    err << "cannot read " << options.path << '\n';
    return kExitUsage;
  }
  const std::string document = text.str();
  const auto result = pack::load_pack(std::string_view(document));
  if (options.format == "json") {
    out << pack::render_json(result.violations).dump(2) << '\n';
  } else {
    for (const auto& v : result.violations) out << pack::render_text(v) << '\n';
  }
  return pack::has_errors(result.violations) ? kExitInvalid : kExitOk;
}

pack::PackPtr open_pack(const std::string& spec, pack::Game game, std::ostream& err) {
  if (spec.empty() || spec == "default") return pack::default_pack_ptr(game);
  std::ifstream in(spec, std::ios::binary);
  if (!in) {
    err << "cannot read pack " << spec << '\n';
    return nullptr;
  }
  std::stringstream text;
  text << in.rdbuf();
  const std::string document = text.str();
  auto result = pack::load_pack(std::string_view(document));
  if (!result.ok()) {
    err << spec << " is not a valid pack:\n";
    for (const auto& v : result.violations) err << "  " << pack::render_text(v) << '\n';
    return nullptr;
  }
  if (result.pack->game != game) {
    err << spec << " is a " << pack::to_string(result.pack->game) << " pack\n";
    return nullptr;
  }
  return std::make_shared<const pack::ContentPack>(std::move(*result.pack));
}

}  // namespace growthlab::cli
