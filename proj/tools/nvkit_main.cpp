// nvkit command-line front end: one subcommand per pipeline stage, exit 0 on
// success, 1 on data errors, 2 on usage errors. Machine-readable output goes
// to stdout or --out; diagnostics go to stderr.

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "nvkit/audio.hpp"
#include "nvkit/error.hpp"
#include "nvkit/grammar.hpp"
#include "nvkit/lexicon.hpp"
#include "nvkit/manifest.hpp"
#include "nvkit/metrics.hpp"
#include "nvkit/randgen.hpp"
#include "nvkit/render.hpp"
#include "nvkit/segmentation.hpp"
#include "nvkit/semantics.hpp"
#include "nvkit/util.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::string lexicon_path;
  std::string text;
  std::string in_path;
  std::string out_path;
};

nvkit::Lexicon load_lexicon(const CommonOpts& opts) {
  if (!opts.lexicon_path.empty()) return nvkit::Lexicon::load(opts.lexicon_path);
  if (const char* env = std::getenv("NVKIT_LEXICON"); env && *env)
    return nvkit::Lexicon::load(env);
  return nvkit::Lexicon::builtin();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw nvkit::Error(nvkit::ErrorCode::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string input_text(const CommonOpts& opts) {
  if (!opts.in_path.empty()) return std::string(nvkit::trim(read_file(opts.in_path)));
  return opts.text;
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw nvkit::Error(nvkit::ErrorCode::Io, "cannot open " + out_path + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw nvkit::Error(nvkit::ErrorCode::Io, "write failure on " + out_path);
}

void add_text_options(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("text", opts.text, "transcript text");
  cmd->add_option("--in", opts.in_path, "read the transcript from a file");
}

// -------------------------------------------------------------- subcommands

int run_parse(const CommonOpts& opts, bool ast) {
  nvkit::Lexicon lexicon = load_lexicon(opts);
  nvkit::AnnotatedTranscript t = nvkit::parse_transcript(input_text(opts), lexicon);
  std::string out;
  if (ast) {
    for (const auto& e : t.elements()) {
      if (e.tag) {
        out += "T\t";
        out += nvkit::style_name(e.tag->style);
        for (const nvkit::UnitLexeme& u : e.tag->units) {
          out += '\t';
          out += u.base + ":" + std::to_string(u.elongation);
        }
        out += '\n';
      } else {
        out += "V\t" + e.segment->text + "\n";
      }
    }
  } else {
    out = nvkit::serialize(t) + "\n";
  }
  write_output(opts.out_path, out);
  return kExitOk;
}

int run_tokenize(const CommonOpts& opts) {
  nvkit::Lexicon lexicon = load_lexicon(opts);
  nvkit::AnnotatedTranscript t = nvkit::parse_transcript(input_text(opts), lexicon);
  write_output(opts.out_path, nvkit::format_token_stream(nvkit::encode_tokens(lexicon, t)));
  return kExitOk;
}

int run_coarse(const CommonOpts& opts) {
  nvkit::Lexicon lexicon = load_lexicon(opts);
  write_output(opts.out_path, nvkit::to_coarse_text(input_text(opts), lexicon) + "\n");
  return kExitOk;
}

struct SegmentJob {
  std::string listing;
  std::string error;
};

int run_segment(const CommonOpts& opts, const std::vector<std::string>& wavs,
                const nvkit::SegmentationParams& params, const std::string& split_dir,
                int jobs) {
  std::vector<SegmentJob> results(wavs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < wavs.size(); i = next.fetch_add(1)) {
      try {
        nvkit::AudioBuffer audio = nvkit::read_wav(wavs[i]);
        auto segments = nvkit::split_on_silence(audio, params);
        results[i].listing = nvkit::format_segment_listing(wavs[i], segments, audio.sample_rate);
        if (!split_dir.empty()) {
          std::filesystem::create_directories(split_dir);
          std::string stem = std::filesystem::path(wavs[i]).stem().string();
          for (std::size_t s = 0; s < segments.size(); ++s) {
            nvkit::AudioBuffer piece;
            piece.sample_rate = audio.sample_rate;
            piece.samples.assign(audio.samples.begin() + segments[s].start,
                                 audio.samples.begin() + segments[s].end);
            char name[32];
            std::snprintf(name, sizeof(name), "_%03zu.wav", s);
            nvkit::write_wav(std::filesystem::path(split_dir) / (stem + name), piece);
          }
        }
      } catch (const nvkit::Error& e) {
        results[i].error = e.what();
      }
    }
  };
  int thread_count = std::max(1, std::min<int>(jobs, static_cast<int>(wavs.size())));
  std::vector<std::thread> pool;
  for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  std::string listing;
  bool failed = false;
  for (std::size_t i = 0; i < wavs.size(); ++i) {
    if (!results[i].error.empty()) {
      std::cerr << wavs[i] << ": " << results[i].error << "\n";
      failed = true;
    } else {
      listing += results[i].listing;
    }
  }
  write_output(opts.out_path, listing);
  return failed ? kExitData : kExitOk;
}

int run_manifest(const CommonOpts& opts, const std::string& audio_dir,
                 const std::string& transcript_dir) {
  nvkit::Lexicon lexicon = load_lexicon(opts);
  nvkit::BuildResult result = nvkit::build_manifest(audio_dir, transcript_dir, lexicon);
  for (const nvkit::BuildIssue& issue : result.issues)
    std::cerr << issue.kind << "\t" << issue.id << "\t" << issue.detail << "\n";
  write_output(opts.out_path, nvkit::format_manifest(result.manifest));
  return result.issues.empty() ? kExitOk : kExitData;
}

int run_stats(const CommonOpts& opts, const std::string& manifest_path) {
  nvkit::CorpusManifest m = nvkit::read_manifest(manifest_path);
  std::string out = "style\tcount\n";
  int total = 0;
  for (const auto& [style, count] : nvkit::compute_stats(m)) {
    out += nvkit::style_name(style);
    out += '\t';
    out += std::to_string(count);
    out += '\n';
    total += count;
  }
  out += "total\t" + std::to_string(total) + "\n";
  write_output(opts.out_path, out);
  return kExitOk;
}

int run_validate(const CommonOpts& opts, const std::string& manifest_path) {
  nvkit::Lexicon lexicon = load_lexicon(opts);
  nvkit::CorpusManifest m = nvkit::read_manifest(manifest_path);
  std::vector<nvkit::Violation> violations = nvkit::validate(m, lexicon);
  write_output(opts.out_path, nvkit::format_violations(violations));
  for (const nvkit::Violation& v : violations)
    if (v.severity == nvkit::Severity::Error) return kExitData;
  return kExitOk;
}

int run_labels(const CommonOpts& opts, const std::string& manifest_path,
               const std::string& labels_path, const std::string& rescale) {
  nvkit::CorpusManifest m = nvkit::read_manifest(manifest_path);
  std::vector<nvkit::LabelEntry> labels = nvkit::parse_labels_file(labels_path);
  if (!rescale.empty()) {
    auto parts = nvkit::split(rescale, ':');
    double lo = 0, hi = 0;
    if (parts.size() != 2)
      throw nvkit::Error(nvkit::ErrorCode::MalformedLabelFile,
                         "--rescale expects min:max, got '" + rescale + "'");
    try {
      lo = std::stod(parts[0]);
      hi = std::stod(parts[1]);
    } catch (const std::exception&) {
      throw nvkit::Error(nvkit::ErrorCode::MalformedLabelFile,
                         "--rescale expects min:max, got '" + rescale + "'");
    }
    if (!(hi > lo))
      throw nvkit::Error(nvkit::ErrorCode::MalformedLabelFile,
                         "--rescale range must have max > min");
    for (nvkit::LabelEntry& e : labels) {
      e.arousal = (e.arousal - lo) / (hi - lo);
      e.valence = (e.valence - lo) / (hi - lo);
    }
  }
  nvkit::LabelAttachResult result = nvkit::attach_emotion_labels(std::move(m), labels);
  for (const std::string& id : result.unmatched_ids)
    std::cerr << "unmatched\t" << id << "\n";
  write_output(opts.out_path, nvkit::format_manifest(result.manifest));
  return kExitOk;
}

int run_render(const CommonOpts& opts, const nvkit::RenderParams& params,
               const std::string& wav_out) {
  nvkit::Lexicon lexicon = load_lexicon(opts);
  nvkit::AnnotatedTranscript t = nvkit::parse_transcript(input_text(opts), lexicon);
  nvkit::write_wav(wav_out, nvkit::render_transcript(lexicon, t, params));
  return kExitOk;
}

int run_roundtrip(const CommonOpts& opts, int n, std::uint64_t seed, int max_elongation) {
  nvkit::Lexicon lexicon = load_lexicon(opts);
  nvkit::RenderParams render_params;
  nvkit::SegmentationParams seg_params;
  nvkit::TagGenOptions gen;
  gen.max_elongation = max_elongation;
  std::mt19937_64 rng(seed);

  int passed = 0;
  for (int i = 0; i < n; ++i) {
    nvkit::NvTag tag = nvkit::random_tag(rng, lexicon, gen);
    nvkit::AnnotatedTranscript t;
    t.tags.push_back(tag);
    t.source = nvkit::serialize(t);
    nvkit::TokenStream stream = nvkit::encode_tokens(lexicon, t);

    std::vector<double> expected;
    for (const nvkit::StreamElement& e : stream.elements) {
      const auto& tok = std::get<nvkit::NvToken>(e);
      int bursts = tok.kind == nvkit::UnitKind::Discrete ? tok.count : 1;
      for (int b = 0; b < bursts; ++b) expected.push_back(tok.duration_s());
    }

    nvkit::AudioBuffer audio = nvkit::render_transcript(lexicon, t, render_params);
    std::vector<double> recovered = nvkit::recover(audio, seg_params);

    bool ok = recovered.size() == expected.size();
    for (std::size_t k = 0; ok && k < expected.size(); ++k)
      ok = std::abs(recovered[k] - expected[k]) <= 0.030;
    if (ok) {
      ++passed;
    } else {
      std::cerr << "fail\t" << nvkit::serialize(t) << "\texpected " << expected.size()
                << " bursts, recovered " << recovered.size() << "\n";
    }
  }
  std::ostringstream summary;
  summary << passed << "/" << n << " passed\n";
  write_output(opts.out_path, summary.str());
  return passed == n ? kExitOk : kExitData;
}

int run_eval(const CommonOpts& opts, const std::string& ratings_path,
             const std::string& preference_path, bool pretty_confusion) {
  std::string out;
  if (!ratings_path.empty()) {
    std::vector<nvkit::RatingRecord> records = nvkit::parse_ratings_csv(read_file(ratings_path));
    auto nmos = nvkit::mos(records, nvkit::MosField::Nmos);
    auto emos = nvkit::mos(records, nvkit::MosField::Emos);
    out += "# mos\n";
    out += nvkit::format_mos_table(nmos, emos);

    std::map<nvkit::Condition, nvkit::AccuracyReport> reports;
    std::set<nvkit::Condition> present;
    for (const nvkit::RatingRecord& r : records) present.insert(r.condition);
    for (nvkit::Condition c : present) reports[c] = nvkit::accuracy(records, c);
    out += "# accuracy\n";
    out += nvkit::format_accuracy_table(reports);

    out += "# confusion\n";
    for (nvkit::Condition c : present) {
      nvkit::ConfusionMatrix m = nvkit::confusion(records, c);
      out += nvkit::format_confusion_table(c, m);
      if (pretty_confusion) out += nvkit::format_confusion_pretty(c, m);
    }
  }
  if (!preference_path.empty()) {
    std::vector<nvkit::PreferenceRecord> records =
        nvkit::parse_preference_csv(read_file(preference_path));
    std::set<nvkit::Emotion> present;
    for (const nvkit::PreferenceRecord& r : records) present.insert(r.emotion);
    out += "# preference\n";
    for (nvkit::Emotion e : present)
      out += nvkit::format_preference_table(e, nvkit::preference(records, e));
  }
  write_output(opts.out_path, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fine-grained non-verbal vocalization toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  app.add_option("--lexicon", opts.lexicon_path,
                 "unit lexicon file (default: $NVKIT_LEXICON, then built-in)")
      ->envname("NVKIT_LEXICON");

  bool ast = false;
  CLI::App* parse_cmd = app.add_subcommand("parse", "parse a transcript, echo canonical form");
  add_text_options(parse_cmd, opts);
  parse_cmd->add_flag("--ast", ast, "dump the parsed structure instead");
  parse_cmd->add_option("--out", opts.out_path, "output file (default stdout)");

  CLI::App* tokenize_cmd = app.add_subcommand("tokenize", "transcript -> NV token stream");
  add_text_options(tokenize_cmd, opts);
  tokenize_cmd->add_option("--out", opts.out_path, "output file (default stdout)");

  CLI::App* coarse_cmd = app.add_subcommand("coarse", "degrade fine tags to style-only tags");
  add_text_options(coarse_cmd, opts);
  coarse_cmd->add_option("--out", opts.out_path, "output file (default stdout)");

  std::vector<std::string> wav_paths;
  nvkit::SegmentationParams seg_params;
  std::string split_dir;
  int jobs = 1;
  CLI::App* segment_cmd = app.add_subcommand("segment", "split wav files on silence");
  segment_cmd->add_option("wavs", wav_paths, "input wav files")->required();
  segment_cmd->add_option("--threshold", seg_params.silence_threshold_dbfs,
                          "silence threshold in dBFS (default -40)");
  segment_cmd->add_option("--min-silence", seg_params.min_silence_ms,
                          "minimum silence duration in ms (default 200)");
  segment_cmd->add_option("--buffer", seg_params.keep_buffer_ms,
                          "silence kept around segments in ms (default 100)");
  segment_cmd->add_option("--window", seg_params.window_ms, "analysis window in ms (default 10)");
  segment_cmd->add_option("--split-dir", split_dir, "write per-segment wavs here");
  segment_cmd->add_option("--jobs", jobs, "parallel files (default 1)");
  segment_cmd->add_option("--out", opts.out_path, "listing file (default stdout)");

  std::string audio_dir, transcript_dir;
  CLI::App* manifest_cmd = app.add_subcommand("manifest", "build a corpus manifest");
  manifest_cmd->add_option("--audio", audio_dir, "directory of wav files")->required();
  manifest_cmd->add_option("--transcripts", transcript_dir, "directory of .txt transcripts")
      ->required();
  manifest_cmd->add_option("--out", opts.out_path, "manifest file (default stdout)");

  std::string manifest_path;
  CLI::App* stats_cmd = app.add_subcommand("stats", "per-style utterance counts");
  stats_cmd->add_option("manifest", manifest_path, "manifest file")->required();
  stats_cmd->add_option("--out", opts.out_path, "output file (default stdout)");

  CLI::App* validate_cmd = app.add_subcommand("validate", "check manifest data quality");
  validate_cmd->add_option("manifest", manifest_path, "manifest file")->required();
  validate_cmd->add_option("--out", opts.out_path, "violation report (default stdout)");

  std::string labels_path, rescale;
  CLI::App* labels_cmd = app.add_subcommand("labels", "attach arousal/valence labels");
  labels_cmd->add_option("--manifest", manifest_path, "manifest file")->required();
  labels_cmd->add_option("--labels", labels_path, "id<TAB>arousal<TAB>valence file")->required();
  labels_cmd->add_option("--rescale", rescale, "affinely map labels from min:max to [0,1]");
  labels_cmd->add_option("--out", opts.out_path, "output manifest (default stdout)");

  nvkit::RenderParams render_params;
  std::string wav_out;
  CLI::App* render_cmd = app.add_subcommand("render", "render a transcript to oracle audio");
  add_text_options(render_cmd, opts);
  render_cmd->add_option("--out", wav_out, "output wav file")->required();
  render_cmd->add_option("--sample-rate", render_params.sample_rate, "Hz (default 22050)");
  render_cmd->add_option("--gap", render_params.gap_ms, "silence between bursts in ms (default 250)");
  render_cmd->add_option("--amplitude", render_params.burst_amplitude_dbfs,
                         "burst peak in dBFS (default -6)");

  int n = 200;
  std::uint64_t seed = 7;
  int max_elongation = 10;
  CLI::App* roundtrip_cmd =
      app.add_subcommand("roundtrip", "render -> segment -> recover round-trip check");
  roundtrip_cmd->add_option("--n", n, "number of random tags (default 200)");
  roundtrip_cmd->add_option("--seed", seed, "RNG seed (default 7)");
  roundtrip_cmd->add_option("--max-elongation", max_elongation, "default 10");
  roundtrip_cmd->add_option("--out", opts.out_path, "report file (default stdout)");

  std::string ratings_path, preference_path;
  bool pretty_confusion = false;
  CLI::App* eval_cmd = app.add_subcommand("eval", "subjective-evaluation statistics");
  eval_cmd->add_option("--ratings", ratings_path, "ratings csv");
  eval_cmd->add_option("--preference", preference_path, "preference csv");
  eval_cmd->add_flag("--pretty-confusion", pretty_confusion, "also print readable matrices");
  eval_cmd->add_option("--out", opts.out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (parse_cmd->parsed()) return run_parse(opts, ast);
    if (tokenize_cmd->parsed()) return run_tokenize(opts);
    if (coarse_cmd->parsed()) return run_coarse(opts);
    if (segment_cmd->parsed()) return run_segment(opts, wav_paths, seg_params, split_dir, jobs);
    if (manifest_cmd->parsed()) return run_manifest(opts, audio_dir, transcript_dir);
    if (stats_cmd->parsed()) return run_stats(opts, manifest_path);
    if (validate_cmd->parsed()) return run_validate(opts, manifest_path);
    if (labels_cmd->parsed()) return run_labels(opts, manifest_path, labels_path, rescale);
    if (render_cmd->parsed()) return run_render(opts, render_params, wav_out);
    if (roundtrip_cmd->parsed()) return run_roundtrip(opts, n, seed, max_elongation);
    if (eval_cmd->parsed()) return run_eval(opts, ratings_path, preference_path, pretty_confusion);
  } catch (const nvkit::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
