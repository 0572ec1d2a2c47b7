#include "nvkit/semantics.hpp"

#include "nvkit/error.hpp"
#include "nvkit/util.hpp"

namespace nvkit {

namespace {

const LexiconEntry& entry_or_throw(const Lexicon& lexicon, NvStyle style,
                                   const std::string& base) {
  const LexiconEntry* e = lexicon.find(style, base);
  if (!e)
    throw Error(ErrorCode::UnknownUnit, "'" + base + "' is not a " +
                                            std::string(style_name(style)) + " lexeme");
  return *e;
}

}  // namespace

UnitKind classify_unit(const Lexicon& lexicon, NvStyle style, const UnitLexeme& unit) {
  return entry_or_throw(lexicon, style, unit.base).kind;
}

std::int64_t unit_duration_ms(const Lexicon& lexicon, NvStyle style, const UnitLexeme& unit) {
  const LexiconEntry& e = entry_or_throw(lexicon, style, unit.base);
  if (e.kind == UnitKind::Continuous)
    return e.duration_ms + kElongationStepMs * unit.elongation;
  return e.duration_ms;
}

double unit_duration_s(const Lexicon& lexicon, NvStyle style, const UnitLexeme& unit) {
  return static_cast<double>(unit_duration_ms(lexicon, style, unit)) / 1000.0;
}

std::map<std::string, int> count_discrete(const Lexicon& lexicon, const NvTag& tag) {
  std::map<std::string, int> counts;
  for (const UnitLexeme& u : tag.units) {
    if (classify_unit(lexicon, tag.style, u) == UnitKind::Discrete) ++counts[u.base];
  }
  return counts;
}

TokenStream encode_tokens(const Lexicon& lexicon, const AnnotatedTranscript& t) {
  TokenStream stream;
  for (const auto& e : t.elements()) {
    if (e.segment) {
      std::string text(trim(e.segment->text));
      if (!text.empty()) stream.elements.push_back(VerbalSpan{std::move(text)});
      continue;
    }
    const NvTag& tag = *e.tag;
    std::size_t i = 0;
    while (i < tag.units.size()) {
      const UnitLexeme& u = tag.units[i];
      const LexiconEntry& entry = entry_or_throw(lexicon, tag.style, u.base);
      if (entry.kind == UnitKind::Continuous) {
        stream.elements.push_back(NvToken{tag.style, u.base, UnitKind::Continuous, 1,
                                          unit_duration_ms(lexicon, tag.style, u)});
        ++i;
      } else {
        std::size_t run = i + 1;
        while (run < tag.units.size() && tag.units[run].base == u.base &&
               lexicon.find(tag.style, tag.units[run].base)->kind == UnitKind::Discrete)
          ++run;
        stream.elements.push_back(NvToken{tag.style, u.base, UnitKind::Discrete,
                                          static_cast<int>(run - i), entry.duration_ms});
        i = run;
      }
    }
  }
  return stream;
}

std::string format_token_stream(const TokenStream& stream) {
  std::string out;
  for (const StreamElement& e : stream.elements) {
    if (const auto* v = std::get_if<VerbalSpan>(&e)) {
      out += "V\t" + v->text + "\n";
    } else {
      const NvToken& t = std::get<NvToken>(e);
      out += "N\t";
      out += style_name(t.style);
      out += '\t';
      out += t.base;
      out += '\t';
      out += unit_kind_name(t.kind);
      out += '\t';
      out += std::to_string(t.count);
      out += '\t';
      out += format_seconds_ms(t.duration_ms);
      out += '\n';
    }
  }
  return out;
}

}  // namespace nvkit
