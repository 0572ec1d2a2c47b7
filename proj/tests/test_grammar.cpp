#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>

#include "nvkit/error.hpp"
#include "nvkit/grammar.hpp"
#include "nvkit/lexicon.hpp"
#include "nvkit/randgen.hpp"
#include "nvkit/util.hpp"

using namespace nvkit;

namespace {

const Lexicon& lex_table() { return Lexicon::builtin(); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an nvkit::Error");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("lex splits a tagged transcript into the five token kinds") {
  auto tokens = lex("<(crying) whep> hi");
  REQUIRE(tokens.size() == 5);
  CHECK(tokens[0].kind == TokenKind::TagOpen);
  CHECK(tokens[1].kind == TokenKind::StyleName);
  CHECK(tokens[1].text == "crying");
  CHECK(tokens[2].kind == TokenKind::UnitWord);
  CHECK(tokens[2].text == "whep");
  CHECK(tokens[3].kind == TokenKind::TagClose);
  CHECK(tokens[4].kind == TokenKind::VerbalText);
  CHECK(tokens[4].text == " hi");
}

TEST_CASE("lex of plain text is one verbal token") {
  auto tokens = lex("hello");
  REQUIRE(tokens.size() == 1);
  CHECK(tokens[0].kind == TokenKind::VerbalText);
  CHECK(tokens[0].text == "hello");
}

TEST_CASE("lex errors") {
  CHECK(code_of([] { lex("<(crying) whep"); }) == ErrorCode::UnterminatedTag);
  CHECK(code_of([] { lex("<crying>"); }) == ErrorCode::MalformedStyle);
  CHECK(code_of([] { lex("a < b"); }) == ErrorCode::UnterminatedTag);
}

TEST_CASE("lex token spans tile the input") {
  const std::string inputs[] = {
      "<(crying) wuuuuu whep> why you do this to me",
      "hello",
      "a <(screaming) ah> b <(cheering) wo ho yo> c",
      "<( Laughter-open )  ha  ha >",
  };
  for (const std::string& text : inputs) {
    std::string rebuilt;
    std::size_t expected_begin = 0;
    for (const LexToken& tok : lex(text)) {
      CHECK(tok.span.begin == expected_begin);
      rebuilt += text.substr(tok.span.begin, tok.span.end - tok.span.begin);
      expected_begin = tok.span.end;
    }
    CHECK(rebuilt == text);
  }
}

TEST_CASE("parse of the motivating transcript") {
  auto t = parse_transcript("<(crying) wuuuuu whep> why you do this to me", lex_table());
  REQUIRE(t.tags.size() == 1);
  const NvTag& tag = t.tags[0];
  CHECK(tag.style == NvStyle::Crying);
  REQUIRE(tag.units.size() == 2);
  CHECK(tag.units[0] == UnitLexeme{"wuu", 3});
  CHECK(tag.units[1] == UnitLexeme{"whep", 0});
  REQUIRE(t.verbal.size() == 1);
  CHECK(t.verbal[0].text == " why you do this to me");
}

TEST_CASE("parse repeated discrete units") {
  auto t = parse_transcript("<(Laughter-open) ha ha ha>", lex_table());
  REQUIRE(t.tags.size() == 1);
  CHECK(t.tags[0].style == NvStyle::LaughterOpen);
  REQUIRE(t.tags[0].units.size() == 3);
  for (const UnitLexeme& u : t.tags[0].units) CHECK(u == UnitLexeme{"ha", 0});
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_transcript("<(crying) hello>", lex_table()); }) ==
        ErrorCode::UnknownUnit);
  CHECK(code_of([] { parse_transcript("<(giggling) ha>", lex_table()); }) ==
        ErrorCode::UnknownStyle);
  CHECK(code_of([] { parse_transcript("<(crying)>", lex_table()); }) == ErrorCode::EmptyTag);
  CHECK(code_of([] { parse_transcript("<(crying)   >", lex_table()); }) == ErrorCode::EmptyTag);
  // unit permitted under a different style only
  CHECK(code_of([] { parse_transcript("<(screaming) wuu>", lex_table()); }) ==
        ErrorCode::UnknownUnit);
}

TEST_CASE("multi-word lexeme matching is greedy") {
  auto t = parse_transcript("<(cheering) wo ho yo>", lex_table());
  REQUIRE(t.tags[0].units.size() == 2);
  CHECK(t.tags[0].units[0] == UnitLexeme{"wo ho", 0});
  CHECK(t.tags[0].units[1] == UnitLexeme{"yo", 0});

  // elongation lives on the final character of the full lexeme
  auto t2 = parse_transcript("<(cheering) wo hooo>", lex_table());
  CHECK(t2.tags[0].units[0] == UnitLexeme{"wo ho", 2});

  // a bare "wo" matches nothing
  CHECK(code_of([] { parse_transcript("<(cheering) wo>", lex_table()); }) ==
        ErrorCode::UnknownUnit);
}

TEST_CASE("case-insensitive parse, canonical serialize") {
  CHECK(serialize(parse_transcript("<(CRYING) Whep>", lex_table())) == "<(crying) whep>");
  CHECK(serialize(parse_transcript("<(laughter-OPEN) HA>", lex_table())) ==
        "<(Laughter-open) ha>");
  CHECK(serialize(parse_transcript("<(Cheering) Yooo>", lex_table())) == "<(cheering) yooo>");
}

TEST_CASE("serialize is the identity on canonical text") {
  const std::string canonical[] = {
      "<(crying) wuuuuu whep> why you do this to me",
      "<(cheering) wo ho>",
      "<(Laughter-closed) ha ha>",
      "plain verbal text",
  };
  for (const std::string& text : canonical)
    CHECK(serialize(parse_transcript(text, lex_table())) == text);
}

TEST_CASE("serialize from a hand-built AST") {
  AnnotatedTranscript t;
  NvTag tag;
  tag.style = NvStyle::Cheering;
  tag.units.push_back(UnitLexeme{"wo ho", 0});
  t.tags.push_back(tag);
  CHECK(serialize(t) == "<(cheering) wo ho>");
}

TEST_CASE("adjacent tags stay distinct") {
  auto t = parse_transcript("<(crying) whep><(crying) whep>", lex_table());
  CHECK(t.tags.size() == 2);
  CHECK(serialize(t) == "<(crying) whep><(crying) whep>");
}

TEST_CASE("to_coarse degrades tags and keeps verbal text") {
  auto t = parse_transcript("<(crying) wuuuuu whep> why", lex_table());
  CHECK(to_coarse(t) == "<crying> why");

  auto plain = parse_transcript("no tags here", lex_table());
  CHECK(to_coarse(plain) == "no tags here");

  auto multi = parse_transcript("<(Laughter-open) ha ha ha> ok <(screaming) ah>", lex_table());
  CHECK(to_coarse(multi) == "<Laughter-open> ok <screaming>");
}

TEST_CASE("to_coarse_text is idempotent") {
  std::mt19937_64 rng(2024);
  TagGenOptions opts;
  for (int i = 0; i < 200; ++i) {
    std::string text = random_transcript_text(rng, lex_table(), opts, 3);
    std::string coarse = to_coarse_text(text, lex_table());
    CHECK(to_coarse_text(coarse, lex_table()) == coarse);
  }
}

TEST_CASE("round-trip: parse(serialize(parse(t))) == parse(t)") {
  std::mt19937_64 rng(7);
  TagGenOptions opts;
  opts.elongate_discrete = true;
  for (int i = 0; i < 1000; ++i) {
    std::string text = random_transcript_text(rng, lex_table(), opts, 3);
    AnnotatedTranscript first = parse_transcript(text, lex_table());
    AnnotatedTranscript second = parse_transcript(serialize(first), lex_table());
    CHECK(second == first);
    // canonical text is a fixed point
    CHECK(serialize(second) == serialize(first));
  }
}

TEST_CASE("tags and verbal segments tile the source") {
  std::mt19937_64 rng(99);
  TagGenOptions opts;
  for (int i = 0; i < 300; ++i) {
    std::string text = random_transcript_text(rng, lex_table(), opts, 3);
    AnnotatedTranscript t = parse_transcript(text, lex_table());
    std::size_t cursor = 0;
    for (const auto& e : t.elements()) {
      Span span = e.tag ? e.tag->span : e.segment->span;
      CHECK(span.begin == cursor);
      CHECK(span.end > span.begin);
      cursor = span.end;
    }
    CHECK(cursor == text.size());
  }
}

TEST_CASE("fuzzed unknown unit words are rejected, never accepted") {
  std::mt19937_64 rng(41);
  const char letters[] = "abcdefghijklmnopqrstuvwxyz";
  int tried = 0;
  while (tried < 300) {
    std::size_t len = 1 + pick_index(rng, 7);
    std::string word;
    for (std::size_t k = 0; k < len; ++k) word += letters[pick_index(rng, 26)];
    NvStyle style = all_styles()[pick_index(rng, 6)];

    // skip words the grammar legitimately accepts (base + elongation)
    bool legitimate = false;
    for (const LexiconEntry* e : lex_table().entries_for(style)) {
      auto base_words = split_whitespace(e->base);
      if (base_words.size() == 1 && word.starts_with(base_words[0])) {
        bool all_last = true;
        for (std::size_t k = base_words[0].size(); k < word.size(); ++k)
          all_last = all_last && word[k] == base_words[0].back();
        legitimate = legitimate || all_last;
      }
    }
    if (legitimate) continue;
    ++tried;
    std::string text = "<(" + std::string(style_name(style)) + ") " + word + ">";
    CHECK(code_of([&] { parse_transcript(text, lex_table()); }) == ErrorCode::UnknownUnit);
  }
}

TEST_CASE("custom lexicon files extend the grammar without code changes") {
  Lexicon custom = Lexicon::parse(
      "# comment\n"
      "crying\twhep\tdiscrete\t0.3\n"
      "crying\tsob\tcontinuous\t0.9\n");
  auto t = parse_transcript("<(crying) sobbb whep>", custom);
  CHECK(t.tags[0].units[0] == UnitLexeme{"sob", 2});
  // builtin still rejects it
  CHECK(code_of([] { parse_transcript("<(crying) sob>", lex_table()); }) ==
        ErrorCode::UnknownUnit);
}

TEST_CASE("malformed lexicon lines are reported with line numbers") {
  try {
    Lexicon::parse("crying\twhep\tdiscrete\t0.3\ncrying\twuu\tweird\t1.0\n");
    FAIL("expected MalformedLexicon");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedLexicon);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}
