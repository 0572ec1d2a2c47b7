#include "nvkit/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "nvkit/audio.hpp"
#include "nvkit/error.hpp"
#include "nvkit/grammar.hpp"
#include "nvkit/util.hpp"

namespace nvkit {

namespace {

constexpr std::string_view kManifestHeader =
    "id\taudio_path\tspeaker_id\tstyle\tarousal\tvalence\tduration_s\ttranscript";

std::string format_label(double v) {
  std::string s = format_fixed(v, 6);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

// stem up to the first '_' names the speaker (p001_crying_003 -> p001)
std::string speaker_from_stem(const std::string& stem) {
  std::size_t us = stem.find('_');
  return us == std::string::npos ? stem : stem.substr(0, us);
}

std::map<std::string, std::filesystem::path> scan_by_stem(const std::filesystem::path& dir,
                                                          std::string_view extension,
                                                          std::vector<BuildIssue>& issues) {
  std::map<std::string, std::filesystem::path> out;
  if (!std::filesystem::exists(dir)) return out;
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && to_lower(entry.path().extension().string()) == extension)
      paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  for (const auto& p : paths) {
    std::string stem = p.stem().string();
    if (!out.emplace(stem, p).second)
      issues.push_back({stem, "DuplicateId", p.generic_string() + " shadowed by " +
                                                 out[stem].generic_string()});
  }
  return out;
}

double parse_number(std::string_view field, std::string_view what, ErrorCode code, int line) {
  try {
    std::size_t used = 0;
    std::string s(trim(field));
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw Error(code, "line " + std::to_string(line) + ": bad " + std::string(what) + " '" +
                          std::string(field) + "'");
  }
}

}  // namespace

std::string_view severity_name(Severity s) {
  switch (s) {
    case Severity::Info: return "info";
    case Severity::Warning: return "warning";
    case Severity::Error: return "error";
  }
  return "";
}

std::map<NvStyle, int> compute_stats(const CorpusManifest& m) {
  std::map<NvStyle, int> stats;
  for (NvStyle s : all_styles()) stats[s] = 0;
  for (const UtteranceRecord& r : m.records) {
    if (r.style) ++stats[*r.style];
  }
  return stats;
}

BuildResult build_manifest(const std::filesystem::path& audio_dir,
                           const std::filesystem::path& transcript_dir,
                           const Lexicon& lexicon) {
  BuildResult result;
  std::map<std::string, std::filesystem::path> audio =
      scan_by_stem(audio_dir, ".wav", result.issues);
  std::map<std::string, std::filesystem::path> texts =
      scan_by_stem(transcript_dir, ".txt", result.issues);

  for (const auto& [stem, wav_path] : audio) {
    auto it = texts.find(stem);
    if (it == texts.end()) {
      result.issues.push_back({stem, "MissingTranscript",
                               "no transcript for " + wav_path.generic_string()});
      continue;
    }
    std::ifstream in(it->second);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in) {
      result.issues.push_back({stem, "MissingTranscript",
                               "cannot read " + it->second.generic_string()});
      continue;
    }
    std::string raw(trim(buf.str()));

    AnnotatedTranscript parsed;
    try {
      parsed = parse_transcript(raw, lexicon);
    } catch (const Error& e) {
      result.issues.push_back({stem, "UnparseableTranscript", e.what()});
      continue;
    }

    AudioBuffer wav;
    try {
      wav = read_wav(wav_path);
    } catch (const Error& e) {
      result.issues.push_back({stem, "UnreadableAudio", e.what()});
      continue;
    }

    UtteranceRecord rec;
    rec.id = stem;
    rec.audio_path = wav_path.generic_string();
    rec.speaker_id = speaker_from_stem(stem);
    if (!parsed.tags.empty()) rec.style = parsed.tags.front().style;
    rec.duration_s = wav.duration_s();
    rec.transcript = serialize(parsed);
    result.manifest.records.push_back(std::move(rec));
  }
  // scan_by_stem returns sorted stems, so records are already ordered by id
  result.manifest.stats = compute_stats(result.manifest);
  return result;
}

std::vector<Violation> validate(const CorpusManifest& m, const Lexicon& lexicon) {
  std::vector<Violation> out;
  for (const UtteranceRecord& r : m.records) {
    std::optional<AnnotatedTranscript> parsed;
    try {
      parsed = parse_transcript(r.transcript, lexicon);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::UnknownUnit)
        out.push_back({Severity::Error, r.id, "lexicon_mismatch", e.what()});
      else
        out.push_back({Severity::Error, r.id, "unparseable_transcript", e.what()});
    }
    if (parsed) {
      std::optional<NvStyle> first_style;
      if (!parsed->tags.empty()) first_style = parsed->tags.front().style;
      if (r.style != first_style)
        out.push_back({Severity::Error, r.id, "style_mismatch",
                       std::string("manifest style '") +
                           (r.style ? std::string(style_name(*r.style)) : "-") +
                           "' does not match first tag '" +
                           (first_style ? std::string(style_name(*first_style)) : "-") + "'"});
      std::set<NvStyle> styles;
      for (const NvTag& t : parsed->tags) styles.insert(t.style);
      if (styles.size() > 1)
        out.push_back({Severity::Info, r.id, "multiple_styles",
                       std::to_string(styles.size()) + " distinct tag styles"});
    }
    if (r.style && (r.duration_s < 2.0 || r.duration_s > 6.0))
      out.push_back({Severity::Warning, r.id, "duration_range",
                     format_fixed(r.duration_s, 3) + " s outside [2, 6] s"});
    if (r.arousal.has_value() != r.valence.has_value())
      out.push_back({Severity::Error, r.id, "label_pairing",
                     "arousal and valence must be present together"});
    if (r.arousal && (*r.arousal < 0.0 || *r.arousal > 1.0))
      out.push_back({Severity::Error, r.id, "label_range",
                     "arousal " + format_label(*r.arousal) + " outside [0, 1]"});
    if (r.valence && (*r.valence < 0.0 || *r.valence > 1.0))
      out.push_back({Severity::Error, r.id, "label_range",
                     "valence " + format_label(*r.valence) + " outside [0, 1]"});
  }
  return out;
}

std::string format_violations(const std::vector<Violation>& violations) {
  std::string out;
  for (const Violation& v : violations) {
    out += severity_name(v.severity);
    out += '\t';
    out += v.id;
    out += '\t';
    out += v.rule;
    out += '\t';
    out += v.detail;
    out += '\n';
  }
  return out;
}

std::vector<LabelEntry> parse_labels_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open labels file " + path.string());
  std::vector<LabelEntry> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty() || trim(line).front() == '#') continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 3)
      throw Error(ErrorCode::MalformedLabelFile,
                  "line " + std::to_string(line_no) + ": expected id<TAB>arousal<TAB>valence");
    LabelEntry e;
    e.id = std::string(trim(cols[0]));
    if (e.id.empty())
      throw Error(ErrorCode::MalformedLabelFile,
                  "line " + std::to_string(line_no) + ": empty id");
    e.arousal = parse_number(cols[1], "arousal", ErrorCode::MalformedLabelFile, line_no);
    e.valence = parse_number(cols[2], "valence", ErrorCode::MalformedLabelFile, line_no);
    out.push_back(std::move(e));
  }
  return out;
}

LabelAttachResult attach_emotion_labels(CorpusManifest m,
                                        const std::vector<LabelEntry>& labels) {
  LabelAttachResult result;
  std::map<std::string, UtteranceRecord*> by_id;
  for (UtteranceRecord& r : m.records) by_id[r.id] = &r;
  for (const LabelEntry& e : labels) {
    auto it = by_id.find(e.id);
    if (it == by_id.end()) {
      result.unmatched_ids.push_back(e.id);
      continue;
    }
    it->second->arousal = e.arousal;
    it->second->valence = e.valence;
  }
  result.manifest = std::move(m);
  return result;
}

std::string format_manifest(const CorpusManifest& m) {
  std::string out(kManifestHeader);
  out += '\n';
  for (const UtteranceRecord& r : m.records) {
    out += r.id;
    out += '\t';
    out += r.audio_path;
    out += '\t';
    out += r.speaker_id;
    out += '\t';
    out += r.style ? std::string(style_name(*r.style)) : "-";
    out += '\t';
    out += r.arousal ? format_label(*r.arousal) : "-";
    out += '\t';
    out += r.valence ? format_label(*r.valence) : "-";
    out += '\t';
    out += format_fixed(r.duration_s, 3);
    out += '\t';
    out += r.transcript;
    out += '\n';
  }
  return out;
}

void write_manifest(const std::filesystem::path& path, const CorpusManifest& m) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  std::string text = format_manifest(m);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::Io, "write failure on " + path.string());
}

CorpusManifest parse_manifest(std::string_view text) {
  CorpusManifest m;
  std::vector<std::string> lines = split(text, '\n');
  if (lines.empty() || trim(lines[0]) != kManifestHeader)
    throw Error(ErrorCode::MalformedManifest, "missing or wrong header line");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    std::vector<std::string> cols = split(lines[i], '\t');
    if (cols.size() != 8)
      throw Error(ErrorCode::MalformedManifest,
                  "line " + std::to_string(i + 1) + ": expected 8 tab-separated columns");
    UtteranceRecord r;
    r.id = cols[0];
    r.audio_path = cols[1];
    r.speaker_id = cols[2];
    if (cols[3] != "-") {
      auto style = style_from_name(cols[3]);
      if (!style)
        throw Error(ErrorCode::MalformedManifest,
                    "line " + std::to_string(i + 1) + ": unknown style '" + cols[3] + "'");
      r.style = *style;
    }
    int line_no = static_cast<int>(i + 1);
    if (cols[4] != "-")
      r.arousal = parse_number(cols[4], "arousal", ErrorCode::MalformedManifest, line_no);
    if (cols[5] != "-")
      r.valence = parse_number(cols[5], "valence", ErrorCode::MalformedManifest, line_no);
    r.duration_s = parse_number(cols[6], "duration", ErrorCode::MalformedManifest, line_no);
    r.transcript = cols[7];
    m.records.push_back(std::move(r));
  }
  m.stats = compute_stats(m);
  return m;
}

CorpusManifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open manifest " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str());
}

}  // namespace nvkit
