#include "nvkit/lexicon.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "nvkit/error.hpp"
#include "nvkit/util.hpp"

namespace nvkit {

namespace {

// Kept in sync with data/lexicon.tsv; the file is the editable copy.
constexpr std::string_view kBuiltinLexicon =
    "cheering\two ho\tcontinuous\t0.8\n"
    "cheering\tyo\tcontinuous\t0.5\n"
    "yelling\they\tcontinuous\t0.5\n"
    "Laughter-open\tha\tdiscrete\t0.25\n"
    "Laughter-closed\tha\tdiscrete\t0.25\n"
    "crying\twhep\tdiscrete\t0.3\n"
    "crying\twuu\tcontinuous\t1.0\n"
    "crying\tsneeze\tdiscrete\t0.5\n"
    "screaming\tah\tcontinuous\t0.8\n";

int word_count(std::string_view s) {
  return static_cast<int>(split_whitespace(s).size());
}

}  // namespace

std::string_view unit_kind_name(UnitKind kind) {
  return kind == UnitKind::Discrete ? "discrete" : "continuous";
}

const Lexicon& Lexicon::builtin() {
  static const Lexicon instance = Lexicon::parse(kBuiltinLexicon);
  return instance;
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open lexicon file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Lexicon Lexicon::parse(std::string_view text) {
  Lexicon lex;
  int line_no = 0;
  for (const std::string& raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cols = split(raw, '\t');
    if (cols.size() != 4)
      throw Error(ErrorCode::MalformedLexicon,
                  "line " + std::to_string(line_no) + ": expected 4 tab-separated columns");
    auto style = style_from_name(trim(cols[0]));
    if (!style)
      throw Error(ErrorCode::MalformedLexicon,
                  "line " + std::to_string(line_no) + ": unknown style '" + cols[0] + "'");
    std::string base = to_lower(trim(cols[1]));
    if (base.empty())
      throw Error(ErrorCode::MalformedLexicon,
                  "line " + std::to_string(line_no) + ": empty base lexeme");
    std::string kind_s = to_lower(trim(cols[2]));
    UnitKind kind;
    if (kind_s == "discrete") kind = UnitKind::Discrete;
    else if (kind_s == "continuous") kind = UnitKind::Continuous;
    else
      throw Error(ErrorCode::MalformedLexicon,
                  "line " + std::to_string(line_no) + ": kind must be discrete or continuous");
    double seconds;
    try {
      seconds = std::stod(std::string(trim(cols[3])));
    } catch (const std::exception&) {
      throw Error(ErrorCode::MalformedLexicon,
                  "line " + std::to_string(line_no) + ": bad duration '" + cols[3] + "'");
    }
    if (!(seconds > 0))
      throw Error(ErrorCode::MalformedLexicon,
                  "line " + std::to_string(line_no) + ": duration must be positive");
    lex.entries_.push_back(LexiconEntry{
        *style, std::move(base), kind,
        static_cast<std::int64_t>(std::llround(seconds * 1000.0))});
  }
  return lex;
}

const LexiconEntry* Lexicon::find(NvStyle style, std::string_view base) const {
  std::string lower = to_lower(base);
  for (const LexiconEntry& e : entries_) {
    if (e.style == style && e.base == lower) return &e;
  }
  return nullptr;
}

std::vector<const LexiconEntry*> Lexicon::entries_for(NvStyle style) const {
  std::vector<const LexiconEntry*> out;
  for (const LexiconEntry& e : entries_) {
    if (e.style == style) out.push_back(&e);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const LexiconEntry* a, const LexiconEntry* b) {
                     return word_count(a->base) > word_count(b->base);
                   });
  return out;
}

}  // namespace nvkit
