#ifndef NVKIT_RANDGEN_HPP
#define NVKIT_RANDGEN_HPP

#include <random>
#include <string>

#include "nvkit/grammar.hpp"
#include "nvkit/lexicon.hpp"

namespace nvkit {

// std::uniform_int_distribution varies across standard libraries; these keep
// seeded runs reproducible everywhere. Modulo bias is irrelevant at these
// ranges.
inline std::size_t pick_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}
inline int pick_int(std::mt19937_64& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct TagGenOptions {
  int min_units = 1;
  int max_units = 4;
  int max_elongation = 10;
  bool elongate_discrete = false;  // grammar allows it; render durations ignore it
};

// A random valid tag under the lexicon: random style, unit sequence, and
// elongations.
NvTag random_tag(std::mt19937_64& rng, const Lexicon& lexicon, const TagGenOptions& opts);

// Surface text for a tag with randomized casing and extra spacing; parses to
// the same structural tag.
std::string random_tag_text(std::mt19937_64& rng, const NvTag& tag);

// One or more tags interleaved with short verbal phrases.
std::string random_transcript_text(std::mt19937_64& rng, const Lexicon& lexicon,
                                   const TagGenOptions& opts, int max_tags);

}  // namespace nvkit

#endif  // NVKIT_RANDGEN_HPP
