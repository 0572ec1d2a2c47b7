#ifndef NVKIT_RENDER_HPP
#define NVKIT_RENDER_HPP

#include <cstdint>
#include <vector>

#include "nvkit/audio.hpp"
#include "nvkit/segmentation.hpp"
#include "nvkit/semantics.hpp"

namespace nvkit {

// Deterministic tone-burst renderer. Carrier frequencies are arbitrary but
// distinct per style so bursts are easy to tell apart by eye; the round-trip
// properties do not depend on them. gap_ms stays above the default
// min_silence_ms so the segmenter can separate bursts.
struct RenderParams {
  int sample_rate = 22050;
  double burst_amplitude_dbfs = -6.0;
  double gap_ms = 250.0;
  double fade_ms = 5.0;
  double verbal_tone_hz = 220.0;
  double verbal_word_ms = 200.0;

  double tone_hz(NvStyle style) const;
};

// Discrete with count n -> n bursts of the nominal unit duration separated
// by gap_ms of digital silence; continuous -> one burst of duration_ms.
AudioBuffer render_token(const NvToken& token, const RenderParams& params);

// All tokens in stream order, gap_ms between bursts; each whitespace-
// separated verbal word becomes one verbal_word_ms burst at the verbal
// carrier. Empty transcript -> empty buffer.
AudioBuffer render_transcript(const Lexicon& lexicon, const AnnotatedTranscript& t,
                              const RenderParams& params);

// split_on_silence, then strip the kept buffer from each segment (edges that
// touch the start or end of the buffer never received one). Returns per-burst
// durations in seconds, in order. Input must come from this renderer.
std::vector<double> recover(const AudioBuffer& audio, const SegmentationParams& params);

}  // namespace nvkit

#endif  // NVKIT_RENDER_HPP
