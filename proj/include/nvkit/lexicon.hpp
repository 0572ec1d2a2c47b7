#ifndef NVKIT_LEXICON_HPP
#define NVKIT_LEXICON_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "nvkit/style.hpp"

namespace nvkit {

enum class UnitKind { Discrete, Continuous };

std::string_view unit_kind_name(UnitKind kind);

// One permitted base lexeme under a style. duration_ms is the nominal
// per-unit duration for discrete lexemes and the un-elongated base duration
// for continuous ones.
struct LexiconEntry {
  NvStyle style;
  std::string base;  // canonical lowercase form, may contain spaces ("wo ho")
  UnitKind kind;
  std::int64_t duration_ms;
};

// Style -> permitted base lexemes, with kind and duration columns. Loaded
// from a tab-separated file so new styles or units need no code change:
//   style<TAB>base<TAB>kind<TAB>duration_s
// Lines starting with '#' are comments.
class Lexicon {
 public:
  // Compiled-in copy of data/lexicon.tsv.
  static const Lexicon& builtin();
  static Lexicon load(const std::filesystem::path& path);
  static Lexicon parse(std::string_view text);

  // nullptr when (style, base) is not a permitted pair.
  const LexiconEntry* find(NvStyle style, std::string_view base) const;

  // Entries for one style, multi-word lexemes first so a greedy matcher
  // resolves "wo ho yo" as ["wo ho", "yo"].
  std::vector<const LexiconEntry*> entries_for(NvStyle style) const;

  const std::vector<LexiconEntry>& entries() const { return entries_; }

 private:
  std::vector<LexiconEntry> entries_;
};

}  // namespace nvkit

#endif  // NVKIT_LEXICON_HPP
