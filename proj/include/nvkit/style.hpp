#ifndef NVKIT_STYLE_HPP
#define NVKIT_STYLE_HPP

#include <array>
#include <optional>
#include <string_view>

namespace nvkit {

// The six non-verbal categories. The canonical surface names are the ones
// written inside tags; parsing accepts any casing.
enum class NvStyle {
  Cheering,
  Yelling,
  LaughterOpen,
  LaughterClosed,
  Crying,
  Screaming,
};

inline constexpr int kStyleCount = 6;

constexpr std::array<NvStyle, kStyleCount> all_styles() {
  return {NvStyle::Cheering,       NvStyle::Yelling, NvStyle::LaughterOpen,
          NvStyle::LaughterClosed, NvStyle::Crying,  NvStyle::Screaming};
}

// Canonical surface name, e.g. "Laughter-open".
std::string_view style_name(NvStyle style);

// Case-insensitive lookup; nullopt for anything outside the six categories.
std::optional<NvStyle> style_from_name(std::string_view name);

}  // namespace nvkit

#endif  // NVKIT_STYLE_HPP
