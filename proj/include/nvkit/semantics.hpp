#ifndef NVKIT_SEMANTICS_HPP
#define NVKIT_SEMANTICS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "nvkit/grammar.hpp"
#include "nvkit/lexicon.hpp"

namespace nvkit {

// Each trailing-character repeat of a continuous unit adds 0.2 s.
inline constexpr std::int64_t kElongationStepMs = 200;

// Structural encoding of one unit run: the style parser's category, the
// discrete unit parser's count, and the duration parser's output.
// Durations are held in integer milliseconds so the elongation rule is exact;
// duration_ms is per single unit for discrete tokens and the total for
// continuous ones.
struct NvToken {
  NvStyle style;
  std::string base;
  UnitKind kind;
  int count = 1;  // run length for discrete; always 1 for continuous
  std::int64_t duration_ms = 0;

  double duration_s() const { return static_cast<double>(duration_ms) / 1000.0; }

  friend bool operator==(const NvToken&, const NvToken&) = default;
};

struct VerbalSpan {
  std::string text;
  friend bool operator==(const VerbalSpan&, const VerbalSpan&) = default;
};

using StreamElement = std::variant<VerbalSpan, NvToken>;

// NV tokens interleaved with verbal spans, in source order.
struct TokenStream {
  std::vector<StreamElement> elements;
};

// Errors: UnknownUnit when (style, base) is not in the lexicon.
UnitKind classify_unit(const Lexicon& lexicon, NvStyle style, const UnitLexeme& unit);

// Continuous: base duration + 0.2 s per elongation character (exact in ms).
// Discrete: the lexicon's nominal per-unit duration; elongation ignored.
std::int64_t unit_duration_ms(const Lexicon& lexicon, NvStyle style, const UnitLexeme& unit);
double unit_duration_s(const Lexicon& lexicon, NvStyle style, const UnitLexeme& unit);

// Per-base counts of the tag's discrete units; continuous units excluded.
std::map<std::string, int> count_discrete(const Lexicon& lexicon, const NvTag& tag);

// Consecutive identical discrete units collapse into one token with
// count = run length; each continuous unit becomes its own token. Verbal
// segments become VerbalSpan elements (trimmed; whitespace-only dropped).
TokenStream encode_tokens(const Lexicon& lexicon, const AnnotatedTranscript& t);

// Line-oriented export: "V<TAB>text" or
// "N<TAB>style<TAB>base<TAB>kind<TAB>count<TAB>duration_s".
std::string format_token_stream(const TokenStream& stream);

}  // namespace nvkit

#endif  // NVKIT_SEMANTICS_HPP
