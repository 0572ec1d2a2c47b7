#ifndef NVKIT_GRAMMAR_HPP
#define NVKIT_GRAMMAR_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nvkit/lexicon.hpp"
#include "nvkit/style.hpp"

namespace nvkit {

// Half-open character range into the source transcript.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

// One unit inside a tag, decomposed into its canonical base lexeme plus the
// number of trailing-character repeats ("wuuuuu" -> base "wuu", elongation 3).
struct UnitLexeme {
  std::string base;
  int elongation = 0;

  // base with its final character repeated `elongation` additional times
  std::string surface() const;

  friend bool operator==(const UnitLexeme& a, const UnitLexeme& b) {
    return a.base == b.base && a.elongation == b.elongation;
  }
};

struct NvTag {
  NvStyle style;
  std::vector<UnitLexeme> units;  // non-empty
  Span span;                      // covers "<...>" in the source

  friend bool operator==(const NvTag& a, const NvTag& b) {
    return a.style == b.style && a.units == b.units;
  }
};

struct VerbalSegment {
  std::string text;
  Span span;

  friend bool operator==(const VerbalSegment& a, const VerbalSegment& b) {
    return a.text == b.text;
  }
};

// Parse result: tags and verbal segments tile the source without gaps.
// Equality is structural (styles, units, verbal text, interleaving order);
// spans are source-coordinate metadata and do not participate.
struct AnnotatedTranscript {
  std::string source;
  std::vector<NvTag> tags;              // in span order
  std::vector<VerbalSegment> verbal;    // in span order

  struct Element {
    const NvTag* tag = nullptr;             // set for tag elements
    const VerbalSegment* segment = nullptr; // set for verbal elements
  };
  // Tags and verbal segments merged into span order.
  std::vector<Element> elements() const;

  friend bool operator==(const AnnotatedTranscript& a, const AnnotatedTranscript& b);
};

enum class TokenKind { TagOpen, StyleName, UnitWord, TagClose, VerbalText };

std::string_view token_kind_name(TokenKind kind);

// text carries the semantic payload (style name without parens, unit word
// without surrounding spaces); span covers the token's full surface so that
// token spans tile the input exactly.
struct LexToken {
  TokenKind kind;
  std::string text;
  Span span;
};

// Errors: UnterminatedTag, MalformedStyle.
std::vector<LexToken> lex(std::string_view text);

// Errors: UnknownStyle, EmptyTag, UnknownUnit, plus everything lex raises.
AnnotatedTranscript parse_transcript(std::string_view text, const Lexicon& lexicon);

// Canonical text: canonical style names, lowercase units, single spaces
// between units. parse_transcript(serialize(t)) == t.
std::string serialize(const AnnotatedTranscript& t);

// Every tag degraded to a style-only "<style-name>" tag; verbal text kept.
std::string to_coarse(const AnnotatedTranscript& t);

// String-level variant: fine tags are degraded, already-coarse "<style>"
// tags pass through untouched, so the operation is idempotent on its own
// output.
std::string to_coarse_text(std::string_view text, const Lexicon& lexicon);

}  // namespace nvkit

#endif  // NVKIT_GRAMMAR_HPP
