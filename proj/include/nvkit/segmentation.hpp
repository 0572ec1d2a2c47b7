#ifndef NVKIT_SEGMENTATION_HPP
#define NVKIT_SEGMENTATION_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "nvkit/audio.hpp"

namespace nvkit {

// Defaults reproduce the published preprocessing: -40 dBFS threshold,
// 200 ms minimum silence, 100 ms keep-buffer.
struct SegmentationParams {
  double silence_threshold_dbfs = -40.0;
  double min_silence_ms = 200.0;
  double keep_buffer_ms = 100.0;
  double window_ms = 10.0;
};

// Value returned for an all-zero window (conceptually -inf dBFS).
inline constexpr double kSilenceFloorDbfs = -std::numeric_limits<double>::infinity();

// 20*log10(rms / 32768). Errors: EmptyWindow.
double rms_dbfs(std::span<const std::int16_t> window);

// Sample ranges, end exclusive.
struct SampleInterval {
  std::int64_t begin = 0;
  std::int64_t end = 0;
  friend bool operator==(const SampleInterval&, const SampleInterval&) = default;
};

struct MsInterval {
  double begin_ms = 0;
  double end_ms = 0;
};

// Maximal runs of analysis windows whose RMS is below the threshold, at
// least min_silence_ms long. Windows are fixed and non-overlapping;
// boundaries are quantized to window starts (final window may be partial).
std::vector<SampleInterval> detect_silence_samples(const AudioBuffer& audio,
                                                   const SegmentationParams& params);
std::vector<MsInterval> detect_silence(const AudioBuffer& audio,
                                       const SegmentationParams& params);

// A silence-delimited utterance, including the kept buffer on both sides.
struct SegmentSpec {
  std::int64_t start = 0;
  std::int64_t end = 0;  // exclusive
  std::int64_t length() const { return end - start; }
  friend bool operator==(const SegmentSpec&, const SegmentSpec&) = default;
};

// Non-silent runs extended by keep_buffer_ms into adjacent silence. When the
// silence between two runs is shorter than twice the buffer, each side gets
// half of it (floor division in samples, remainder to the earlier segment).
// All-silent input yields an empty list.
std::vector<SegmentSpec> split_on_silence(const AudioBuffer& audio,
                                          const SegmentationParams& params);

// Tab-separated listing rows:
// source-path<TAB>index<TAB>start-sample<TAB>end-sample<TAB>duration-s
std::string format_segment_listing(const std::string& source_path,
                                   const std::vector<SegmentSpec>& segments,
                                   int sample_rate);

}  // namespace nvkit

#endif  // NVKIT_SEGMENTATION_HPP
