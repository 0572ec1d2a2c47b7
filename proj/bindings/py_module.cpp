// nvkit._core: python bindings over the C++ toolkit.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "nvkit/audio.hpp"
#include "nvkit/error.hpp"
#include "nvkit/grammar.hpp"
#include "nvkit/lexicon.hpp"
#include "nvkit/manifest.hpp"
#include "nvkit/metrics.hpp"
#include "nvkit/render.hpp"
#include "nvkit/segmentation.hpp"
#include "nvkit/semantics.hpp"

namespace py = pybind11;
using namespace nvkit;

PYBIND11_MODULE(_core, m) {
  m.doc() = "fine-grained non-verbal vocalization toolkit";

  py::register_exception<Error>(m, "NvkitError");

  py::enum_<NvStyle>(m, "NvStyle")
      .value("CHEERING", NvStyle::Cheering)
      .value("YELLING", NvStyle::Yelling)
      .value("LAUGHTER_OPEN", NvStyle::LaughterOpen)
      .value("LAUGHTER_CLOSED", NvStyle::LaughterClosed)
      .value("CRYING", NvStyle::Crying)
      .value("SCREAMING", NvStyle::Screaming);

  py::enum_<UnitKind>(m, "UnitKind")
      .value("DISCRETE", UnitKind::Discrete)
      .value("CONTINUOUS", UnitKind::Continuous);

  m.def("style_name", &style_name);
  m.def("style_from_name", &style_from_name);

  py::class_<LexiconEntry>(m, "LexiconEntry")
      .def_readonly("style", &LexiconEntry::style)
      .def_readonly("base", &LexiconEntry::base)
      .def_readonly("kind", &LexiconEntry::kind)
      .def_readonly("duration_ms", &LexiconEntry::duration_ms);

  py::class_<Lexicon>(m, "Lexicon")
      .def_static("builtin", [] { return Lexicon::builtin(); })
      .def_static("load", &Lexicon::load)
      .def_static("parse", [](const std::string& text) { return Lexicon::parse(text); })
      .def("entries", &Lexicon::entries)
      .def("find",
           [](const Lexicon& lex, NvStyle style, const std::string& base) -> py::object {
             const LexiconEntry* e = lex.find(style, base);
             return e ? py::cast(*e) : py::none();
           });

  py::class_<UnitLexeme>(m, "UnitLexeme")
      .def(py::init([](const std::string& base, int elongation) {
             return UnitLexeme{base, elongation};
           }),
           py::arg("base"), py::arg("elongation") = 0)
      .def_readonly("base", &UnitLexeme::base)
      .def_readonly("elongation", &UnitLexeme::elongation)
      .def("surface", &UnitLexeme::surface)
      .def("__eq__", [](const UnitLexeme& a, const UnitLexeme& b) { return a == b; });

  py::class_<NvTag>(m, "NvTag")
      .def_readonly("style", &NvTag::style)
      .def_readonly("units", &NvTag::units)
      .def_property_readonly("span", [](const NvTag& t) {
        return py::make_tuple(t.span.begin, t.span.end);
      });

  py::class_<VerbalSegment>(m, "VerbalSegment")
      .def_readonly("text", &VerbalSegment::text)
      .def_property_readonly("span", [](const VerbalSegment& s) {
        return py::make_tuple(s.span.begin, s.span.end);
      });

  py::class_<AnnotatedTranscript>(m, "AnnotatedTranscript")
      .def_readonly("source", &AnnotatedTranscript::source)
      .def_readonly("tags", &AnnotatedTranscript::tags)
      .def_readonly("verbal", &AnnotatedTranscript::verbal)
      .def("__eq__", [](const AnnotatedTranscript& a, const AnnotatedTranscript& b) {
        return a == b;
      });

  m.def("parse_transcript", &parse_transcript, py::arg("text"), py::arg("lexicon"));
  m.def("serialize", &serialize);
  m.def("to_coarse", py::overload_cast<const AnnotatedTranscript&>(&to_coarse));
  m.def("to_coarse_text", &to_coarse_text, py::arg("text"), py::arg("lexicon"));

  py::class_<NvToken>(m, "NvToken")
      .def_readonly("style", &NvToken::style)
      .def_readonly("base", &NvToken::base)
      .def_readonly("kind", &NvToken::kind)
      .def_readonly("count", &NvToken::count)
      .def_readonly("duration_ms", &NvToken::duration_ms)
      .def("duration_s", &NvToken::duration_s);

  m.def("classify_unit", &classify_unit);
  m.def("unit_duration_ms", &unit_duration_ms);
  m.def("unit_duration_s", &unit_duration_s);
  m.def("count_discrete", &count_discrete);
  m.def("encode_tokens", [](const Lexicon& lexicon, const AnnotatedTranscript& t) {
    py::list out;
    for (const StreamElement& e : encode_tokens(lexicon, t).elements) {
      if (const auto* v = std::get_if<VerbalSpan>(&e)) out.append(v->text);
      else out.append(std::get<NvToken>(e));
    }
    return out;
  });
  m.def("format_token_stream", [](const Lexicon& lexicon, const AnnotatedTranscript& t) {
    return format_token_stream(encode_tokens(lexicon, t));
  });

  py::class_<AudioBuffer>(m, "AudioBuffer")
      .def(py::init([](std::vector<std::int16_t> samples, int sample_rate) {
             return AudioBuffer{std::move(samples), sample_rate};
           }),
           py::arg("samples"), py::arg("sample_rate") = 22050)
      .def_readwrite("samples", &AudioBuffer::samples)
      .def_readwrite("sample_rate", &AudioBuffer::sample_rate)
      .def("duration_s", &AudioBuffer::duration_s)
      .def("__len__", [](const AudioBuffer& a) { return a.samples.size(); });

  m.def("read_wav", &read_wav);
  m.def("write_wav", &write_wav);

  py::class_<SegmentationParams>(m, "SegmentationParams")
      .def(py::init<>())
      .def_readwrite("silence_threshold_dbfs", &SegmentationParams::silence_threshold_dbfs)
      .def_readwrite("min_silence_ms", &SegmentationParams::min_silence_ms)
      .def_readwrite("keep_buffer_ms", &SegmentationParams::keep_buffer_ms)
      .def_readwrite("window_ms", &SegmentationParams::window_ms);

  py::class_<SegmentSpec>(m, "SegmentSpec")
      .def_readonly("start", &SegmentSpec::start)
      .def_readonly("end", &SegmentSpec::end)
      .def("length", &SegmentSpec::length);

  m.def("rms_dbfs", [](const std::vector<std::int16_t>& window) {
    return rms_dbfs(std::span<const std::int16_t>(window.data(), window.size()));
  });
  m.def("detect_silence", [](const AudioBuffer& audio, const SegmentationParams& params) {
    py::list out;
    for (const MsInterval& iv : detect_silence(audio, params))
      out.append(py::make_tuple(iv.begin_ms, iv.end_ms));
    return out;
  }, py::arg("audio"), py::arg("params") = SegmentationParams{});
  m.def("split_on_silence", &split_on_silence, py::arg("audio"),
        py::arg("params") = SegmentationParams{});

  py::class_<RenderParams>(m, "RenderParams")
      .def(py::init<>())
      .def_readwrite("sample_rate", &RenderParams::sample_rate)
      .def_readwrite("burst_amplitude_dbfs", &RenderParams::burst_amplitude_dbfs)
      .def_readwrite("gap_ms", &RenderParams::gap_ms);

  m.def("render_token", &render_token, py::arg("token"), py::arg("params") = RenderParams{});
  m.def("render_transcript", &render_transcript, py::arg("lexicon"), py::arg("transcript"),
        py::arg("params") = RenderParams{});
  m.def("recover", &recover, py::arg("audio"), py::arg("params") = SegmentationParams{});

  py::class_<UtteranceRecord>(m, "UtteranceRecord")
      .def_readonly("id", &UtteranceRecord::id)
      .def_readonly("audio_path", &UtteranceRecord::audio_path)
      .def_readonly("speaker_id", &UtteranceRecord::speaker_id)
      .def_readonly("style", &UtteranceRecord::style)
      .def_readonly("arousal", &UtteranceRecord::arousal)
      .def_readonly("valence", &UtteranceRecord::valence)
      .def_readonly("duration_s", &UtteranceRecord::duration_s)
      .def_readonly("transcript", &UtteranceRecord::transcript);

  py::class_<CorpusManifest>(m, "CorpusManifest")
      .def_readonly("records", &CorpusManifest::records)
      .def_readonly("stats", &CorpusManifest::stats);

  py::class_<BuildIssue>(m, "BuildIssue")
      .def_readonly("id", &BuildIssue::id)
      .def_readonly("kind", &BuildIssue::kind)
      .def_readonly("detail", &BuildIssue::detail);

  m.def("build_manifest", [](const std::filesystem::path& audio_dir,
                             const std::filesystem::path& transcript_dir,
                             const Lexicon& lexicon) {
    BuildResult r = build_manifest(audio_dir, transcript_dir, lexicon);
    return py::make_tuple(r.manifest, r.issues);
  });
  m.def("compute_stats", &compute_stats);
  py::class_<Violation>(m, "Violation")
      .def_property_readonly("severity",
                             [](const Violation& v) { return severity_name(v.severity); })
      .def_readonly("id", &Violation::id)
      .def_readonly("rule", &Violation::rule)
      .def_readonly("detail", &Violation::detail);
  m.def("validate", &validate);
  m.def("format_manifest", &format_manifest);
  m.def("write_manifest", &write_manifest);
  m.def("read_manifest", &read_manifest);

  py::enum_<Condition>(m, "Condition")
      .value("VERBAL_ONLY", Condition::VerbalOnly)
      .value("COARSE_NV", Condition::CoarseNV)
      .value("FINE_NV", Condition::FineNV);

  py::enum_<Emotion>(m, "Emotion")
      .value("HAPPY", Emotion::Happy)
      .value("SAD", Emotion::Sad)
      .value("ANGER", Emotion::Anger)
      .value("FEAR", Emotion::Fear);

  py::class_<RatingRecord>(m, "RatingRecord")
      .def_readonly("rater_id", &RatingRecord::rater_id)
      .def_readonly("sample_id", &RatingRecord::sample_id)
      .def_readonly("condition", &RatingRecord::condition)
      .def_readonly("true_emotion", &RatingRecord::true_emotion)
      .def_readonly("chosen_emotion", &RatingRecord::chosen_emotion)
      .def_readonly("nmos", &RatingRecord::nmos)
      .def_readonly("emos", &RatingRecord::emos);

  py::class_<MosStat>(m, "MosStat")
      .def_readonly("n", &MosStat::n)
      .def_readonly("mean", &MosStat::mean)
      .def_readonly("ci95", &MosStat::ci95);

  m.def("parse_ratings_csv", [](const std::string& text) { return parse_ratings_csv(text); });
  m.def("parse_preference_csv",
        [](const std::string& text) { return parse_preference_csv(text); });
  m.def("mos", [](const std::vector<RatingRecord>& records, const std::string& field) {
    MosField f = field == "nmos" ? MosField::Nmos : MosField::Emos;
    py::dict out;
    for (const auto& [key, stat] : mos(records, f))
      out[py::make_tuple(key.first, key.second)] = stat;
    return out;
  });
  m.def("accuracy", [](const std::vector<RatingRecord>& records, Condition c) {
    AccuracyReport r = accuracy(records, c);
    py::dict out;
    py::dict per;
    for (const auto& [e, frac] : r.per_emotion) per[py::cast(e)] = frac;
    out["per_emotion"] = per;
    out["micro"] = r.micro;
    out["macro"] = r.macro;
    out["total"] = r.total;
    return out;
  });
  m.def("confusion", [](const std::vector<RatingRecord>& records, Condition c) {
    ConfusionMatrix m2 = confusion(records, c);
    return py::make_tuple(m2.counts, m2.row_normalized());
  });
  m.def("preference", [](const std::vector<PreferenceRecord>& records, Emotion e) {
    PreferenceHistogram h = preference(records, e);
    py::dict out;
    for (std::size_t i = 0; i < h.variants.size(); ++i)
      out[py::cast(h.variants[i])] = h.fractions[i];
    return out;
  });

  py::class_<PreferenceRecord>(m, "PreferenceRecord")
      .def_readonly("rater_id", &PreferenceRecord::rater_id)
      .def_readonly("emotion", &PreferenceRecord::emotion)
      .def_readonly("ranking", &PreferenceRecord::ranking);
}
