#include "nvkit/grammar.hpp"

#include <algorithm>
#include <cctype>

#include "nvkit/error.hpp"
#include "nvkit/util.hpp"

namespace nvkit {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Word positions inside [begin, end) of text.
struct Word {
  std::string text;
  std::size_t begin;
};

std::vector<Word> words_in(std::string_view text, std::size_t begin, std::size_t end) {
  std::vector<Word> out;
  std::size_t i = begin;
  while (i < end) {
    while (i < end && is_space(text[i])) ++i;
    std::size_t start = i;
    while (i < end && !is_space(text[i])) ++i;
    if (i > start) out.push_back({std::string(text.substr(start, i - start)), start});
  }
  return out;
}

// "wuuuuu" against base word "wuu" -> elongation 3; nullopt when the word is
// not the base plus repeats of its final character. Case-insensitive.
std::optional<int> match_elongated(std::string_view word, std::string_view base_word) {
  std::string w = to_lower(word);
  std::string b = to_lower(base_word);
  if (w.size() < b.size() || w.compare(0, b.size(), b) != 0) return std::nullopt;
  char last = b.back();
  for (std::size_t i = b.size(); i < w.size(); ++i) {
    if (w[i] != last) return std::nullopt;
  }
  return static_cast<int>(w.size() - b.size());
}

// Greedy longest-match of the word sequence against the style's lexicon.
// Multi-word lexemes ("wo ho") are tried before single-word ones; only the
// final word of a lexeme may be elongated.
std::vector<UnitLexeme> group_units(NvStyle style, const std::vector<Word>& words,
                                    const Lexicon& lexicon) {
  std::vector<const LexiconEntry*> bases = lexicon.entries_for(style);
  std::vector<UnitLexeme> units;
  std::size_t i = 0;
  while (i < words.size()) {
    const LexiconEntry* matched = nullptr;
    int elongation = 0;
    std::size_t consumed = 0;
    for (const LexiconEntry* entry : bases) {
      std::vector<std::string> base_words = split_whitespace(entry->base);
      if (i + base_words.size() > words.size()) continue;
      bool head_ok = true;
      for (std::size_t k = 0; k + 1 < base_words.size(); ++k) {
        if (to_lower(words[i + k].text) != base_words[k]) {
          head_ok = false;
          break;
        }
      }
      if (!head_ok) continue;
      auto elong = match_elongated(words[i + base_words.size() - 1].text, base_words.back());
      if (!elong) continue;
      matched = entry;
      elongation = *elong;
      consumed = base_words.size();
      break;
    }
    if (!matched)
      throw Error(ErrorCode::UnknownUnit,
                  "'" + words[i].text + "' is not a " + std::string(style_name(style)) +
                      " lexeme");
    units.push_back(UnitLexeme{matched->base, elongation});
    i += consumed;
  }
  return units;
}

void append_canonical_tag(std::string& out, const NvTag& tag) {
  out += "<(";
  out += style_name(tag.style);
  out += ") ";
  for (std::size_t i = 0; i < tag.units.size(); ++i) {
    if (i) out += ' ';
    out += tag.units[i].surface();
  }
  out += '>';
}

}  // namespace

std::string UnitLexeme::surface() const {
  std::string s = base;
  s.append(static_cast<std::size_t>(elongation), base.back());
  return s;
}

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::TagOpen: return "TagOpen";
    case TokenKind::StyleName: return "StyleName";
    case TokenKind::UnitWord: return "UnitWord";
    case TokenKind::TagClose: return "TagClose";
    case TokenKind::VerbalText: return "VerbalText";
  }
  return "";
}

std::vector<LexToken> lex(std::string_view text) {
  std::vector<LexToken> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (text[i] == '<') {
      std::size_t gt = text.find('>', i);
      if (gt == std::string_view::npos)
        throw Error(ErrorCode::UnterminatedTag,
                    "'<' at position " + std::to_string(i) + " has no matching '>'");
      std::size_t p = i + 1;
      while (p < gt && is_space(text[p])) ++p;
      if (p >= gt || text[p] != '(')
        throw Error(ErrorCode::MalformedStyle,
                    "expected '(' after '<' at position " + std::to_string(i));
      std::size_t close = text.find(')', p);
      if (close == std::string_view::npos || close > gt)
        throw Error(ErrorCode::MalformedStyle,
                    "missing ')' in tag at position " + std::to_string(i));
      std::size_t style_start = p + 1;
      while (style_start < close && is_space(text[style_start])) ++style_start;
      std::string style_text(trim(text.substr(style_start, close - style_start)));

      std::vector<Word> unit_words = words_in(text, close + 1, gt);
      std::size_t style_end = unit_words.empty() ? gt : unit_words.front().begin;

      tokens.push_back({TokenKind::TagOpen, std::string(text.substr(i, style_start - i)),
                        {i, style_start}});
      tokens.push_back({TokenKind::StyleName, style_text, {style_start, style_end}});
      for (std::size_t w = 0; w < unit_words.size(); ++w) {
        std::size_t end = (w + 1 < unit_words.size()) ? unit_words[w + 1].begin : gt;
        tokens.push_back({TokenKind::UnitWord, unit_words[w].text, {unit_words[w].begin, end}});
      }
      tokens.push_back({TokenKind::TagClose, ">", {gt, gt + 1}});
      i = gt + 1;
    } else {
      std::size_t next = text.find('<', i);
      if (next == std::string_view::npos) next = n;
      tokens.push_back({TokenKind::VerbalText, std::string(text.substr(i, next - i)), {i, next}});
      i = next;
    }
  }
  return tokens;
}

AnnotatedTranscript parse_transcript(std::string_view text, const Lexicon& lexicon) {
  std::vector<LexToken> tokens = lex(text);
  AnnotatedTranscript out;
  out.source = std::string(text);

  std::size_t i = 0;
  while (i < tokens.size()) {
    const LexToken& tok = tokens[i];
    if (tok.kind == TokenKind::VerbalText) {
      out.verbal.push_back(VerbalSegment{tok.text, tok.span});
      ++i;
      continue;
    }
    // TagOpen StyleName UnitWord* TagClose, guaranteed by the lexer.
    std::size_t tag_begin = tok.span.begin;
    const LexToken& style_tok = tokens[i + 1];
    auto style = style_from_name(style_tok.text);
    if (!style)
      throw Error(ErrorCode::UnknownStyle, "'" + style_tok.text + "' is not a known style");

    std::vector<Word> words;
    std::size_t j = i + 2;
    while (tokens[j].kind == TokenKind::UnitWord) {
      words.push_back({tokens[j].text, tokens[j].span.begin});
      ++j;
    }
    if (words.empty())
      throw Error(ErrorCode::EmptyTag, "tag at position " + std::to_string(tag_begin) +
                                           " contains no units");
    NvTag tag;
    tag.style = *style;
    tag.units = group_units(*style, words, lexicon);
    tag.span = {tag_begin, tokens[j].span.end};
    out.tags.push_back(std::move(tag));
    i = j + 1;
  }
  return out;
}

std::vector<AnnotatedTranscript::Element> AnnotatedTranscript::elements() const {
  std::vector<Element> out;
  out.reserve(tags.size() + verbal.size());
  std::size_t ti = 0, vi = 0;
  while (ti < tags.size() || vi < verbal.size()) {
    bool take_tag;
    if (ti == tags.size()) take_tag = false;
    else if (vi == verbal.size()) take_tag = true;
    else take_tag = tags[ti].span.begin < verbal[vi].span.begin;
    Element e;
    if (take_tag) e.tag = &tags[ti++];
    else e.segment = &verbal[vi++];
    out.push_back(e);
  }
  return out;
}

bool operator==(const AnnotatedTranscript& a, const AnnotatedTranscript& b) {
  auto ea = a.elements();
  auto eb = b.elements();
  if (ea.size() != eb.size()) return false;
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if ((ea[i].tag != nullptr) != (eb[i].tag != nullptr)) return false;
    if (ea[i].tag) {
      if (!(*ea[i].tag == *eb[i].tag)) return false;
    } else {
      if (!(*ea[i].segment == *eb[i].segment)) return false;
    }
  }
  return true;
}

std::string serialize(const AnnotatedTranscript& t) {
  std::string out;
  for (const auto& e : t.elements()) {
    if (e.tag) append_canonical_tag(out, *e.tag);
    else out += e.segment->text;
  }
  return out;
}

std::string to_coarse(const AnnotatedTranscript& t) {
  std::string out;
  for (const auto& e : t.elements()) {
    if (e.tag) {
      out += '<';
      out += style_name(e.tag->style);
      out += '>';
    } else {
      out += e.segment->text;
    }
  }
  return out;
}

std::string to_coarse_text(std::string_view text, const Lexicon& lexicon) {
  std::string out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (text[i] != '<') {
      std::size_t next = text.find('<', i);
      if (next == std::string_view::npos) next = n;
      out += text.substr(i, next - i);
      i = next;
      continue;
    }
    std::size_t p = i + 1;
    while (p < n && is_space(text[p])) ++p;
    if (p < n && text[p] == '(') {
      // fine-grained tag: parse and degrade
      std::size_t gt = text.find('>', i);
      if (gt == std::string_view::npos)
        throw Error(ErrorCode::UnterminatedTag,
                    "'<' at position " + std::to_string(i) + " has no matching '>'");
      AnnotatedTranscript one = parse_transcript(text.substr(i, gt + 1 - i), lexicon);
      out += to_coarse(one);
      i = gt + 1;
    } else {
      // already-coarse "<style>" tag or stray '<': copy verbatim
      std::size_t gt = text.find('>', i);
      if (gt == std::string_view::npos) gt = n - 1;
      out += text.substr(i, gt + 1 - i);
      i = gt + 1;
    }
  }
  return out;
}

}  // namespace nvkit
