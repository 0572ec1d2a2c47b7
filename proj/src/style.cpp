#include "nvkit/style.hpp"

#include "nvkit/util.hpp"

namespace nvkit {

std::string_view style_name(NvStyle style) {
  switch (style) {
    case NvStyle::Cheering: return "cheering";
    case NvStyle::Yelling: return "yelling";
    case NvStyle::LaughterOpen: return "Laughter-open";
    case NvStyle::LaughterClosed: return "Laughter-closed";
    case NvStyle::Crying: return "crying";
    case NvStyle::Screaming: return "screaming";
  }
  return "";
}

std::optional<NvStyle> style_from_name(std::string_view name) {
  std::string lower = to_lower(name);
  for (NvStyle s : all_styles()) {
    if (lower == to_lower(style_name(s))) return s;
  }
  return std::nullopt;
}

}  // namespace nvkit
