#ifndef NVKIT_MANIFEST_HPP
#define NVKIT_MANIFEST_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nvkit/lexicon.hpp"
#include "nvkit/style.hpp"

namespace nvkit {

// One corpus utterance: segmented audio, fine-grained transcript, speaker,
// and optional continuous emotion labels (present or absent together).
struct UtteranceRecord {
  std::string id;
  std::string audio_path;
  std::string speaker_id;
  std::optional<NvStyle> style;  // dominant style; absent for verbal-only
  std::optional<double> arousal;
  std::optional<double> valence;
  double duration_s = 0;
  std::string transcript;  // canonical fine-grained form
};

struct CorpusManifest {
  std::vector<UtteranceRecord> records;  // ordered by id
  std::map<NvStyle, int> stats;          // per-style counts, zeros included
};

// Exact per-style record counts; styles with no records appear with 0.
std::map<NvStyle, int> compute_stats(const CorpusManifest& m);

struct BuildIssue {
  std::string id;    // stem of the offending pair
  std::string kind;  // MissingTranscript | UnparseableTranscript | UnreadableAudio | DuplicateId
  std::string detail;
};

struct BuildResult {
  CorpusManifest manifest;
  std::vector<BuildIssue> issues;
};

// Pairs every audio file under audio_dir with the same-stem .txt under
// transcript_dir. Problems are collected into issues, not thrown; offending
// pairs are excluded from the manifest. Record order is lexicographic by id,
// so two builds over the same tree are byte-identical.
BuildResult build_manifest(const std::filesystem::path& audio_dir,
                           const std::filesystem::path& transcript_dir,
                           const Lexicon& lexicon);

enum class Severity { Info, Warning, Error };
std::string_view severity_name(Severity s);

struct Violation {
  Severity severity;
  std::string id;
  std::string rule;
  std::string detail;
};

// Data-quality checks: NV duration outside [2, 6] s (warning), unparseable
// transcripts and lexicon/style mismatches (error), labels outside [0, 1]
// (error), multiple tag styles in one transcript (info).
std::vector<Violation> validate(const CorpusManifest& m, const Lexicon& lexicon);

std::string format_violations(const std::vector<Violation>& violations);

struct LabelEntry {
  std::string id;
  double arousal = 0;
  double valence = 0;
};

// Tab-separated id<TAB>arousal<TAB>valence. Errors: MalformedLabelFile.
std::vector<LabelEntry> parse_labels_file(const std::filesystem::path& path);

struct LabelAttachResult {
  CorpusManifest manifest;
  std::vector<std::string> unmatched_ids;  // label ids with no record
};

LabelAttachResult attach_emotion_labels(CorpusManifest m,
                                        const std::vector<LabelEntry>& labels);

// Tab-separated manifest with a header; empty optional fields are "-";
// the transcript is the final column since it contains spaces.
std::string format_manifest(const CorpusManifest& m);
void write_manifest(const std::filesystem::path& path, const CorpusManifest& m);
CorpusManifest read_manifest(const std::filesystem::path& path);  // MalformedManifest
CorpusManifest parse_manifest(std::string_view text);

}  // namespace nvkit

#endif  // NVKIT_MANIFEST_HPP
