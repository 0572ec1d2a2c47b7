#include "nvkit/randgen.hpp"

#include <cctype>

namespace nvkit {

namespace {

const char* kVerbalPhrases[] = {
    "why you do this to me", "what did you do", "oh no", "look at that",
    "i cannot believe it",   "come on",         "really",
};

std::string shuffle_case(std::mt19937_64& rng, std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (std::isalpha(static_cast<unsigned char>(c)) && rng() % 2 == 0)
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace

NvTag random_tag(std::mt19937_64& rng, const Lexicon& lexicon, const TagGenOptions& opts) {
  const auto styles = all_styles();
  NvTag tag;
  tag.style = styles[pick_index(rng, styles.size())];
  auto entries = lexicon.entries_for(tag.style);
  int unit_count = pick_int(rng, opts.min_units, opts.max_units);
  for (int i = 0; i < unit_count; ++i) {
    const LexiconEntry* entry = entries[pick_index(rng, entries.size())];
    int elongation = 0;
    if (entry->kind == UnitKind::Continuous || opts.elongate_discrete)
      elongation = pick_int(rng, 0, opts.max_elongation);
    tag.units.push_back(UnitLexeme{entry->base, elongation});
  }
  return tag;
}

std::string random_tag_text(std::mt19937_64& rng, const NvTag& tag) {
  std::string out = "<";
  if (rng() % 4 == 0) out += ' ';
  out += '(';
  out += shuffle_case(rng, style_name(tag.style));
  out += ')';
  for (const UnitLexeme& u : tag.units) {
    out += rng() % 4 == 0 ? "  " : " ";
    out += shuffle_case(rng, u.surface());
  }
  if (rng() % 4 == 0) out += ' ';
  out += '>';
  return out;
}

std::string random_transcript_text(std::mt19937_64& rng, const Lexicon& lexicon,
                                   const TagGenOptions& opts, int max_tags) {
  std::string out;
  int tags = pick_int(rng, 1, max_tags);
  for (int i = 0; i < tags; ++i) {
    if (i) out += ' ';
    out += random_tag_text(rng, random_tag(rng, lexicon, opts));
    if (rng() % 2 == 0) {
      out += ' ';
      out += kVerbalPhrases[pick_index(rng, std::size(kVerbalPhrases))];
    }
  }
  return out;
}

}  // namespace nvkit
