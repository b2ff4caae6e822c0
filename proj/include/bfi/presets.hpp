#pragma once

#include <span>
#include <string_view>

namespace bfi {

struct Preset {
  std::string_view name;
  std::string_view summary;
  std::string_view config;  ///< study configuration text, as exported
};

std::span<const Preset> presets();
/// Throws Error(unknown_preset).
const Preset& find_preset(std::string_view name);

}  // namespace bfi
