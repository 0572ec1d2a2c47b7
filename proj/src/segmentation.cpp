#include "nvkit/segmentation.hpp"

#include <cmath>

#include "nvkit/error.hpp"
#include "nvkit/util.hpp"

namespace nvkit {

namespace {

constexpr double kFullScale = 32768.0;

// true per analysis window iff rms < threshold; the final window may be
// partial but is never empty.
std::vector<bool> silent_windows(const AudioBuffer& audio, const SegmentationParams& params,
                                 std::int64_t window_samples) {
  const std::int64_t n = audio.size();
  const std::int64_t count = (n + window_samples - 1) / window_samples;
  std::vector<bool> silent(static_cast<std::size_t>(count));
  for (std::int64_t w = 0; w < count; ++w) {
    std::int64_t begin = w * window_samples;
    std::int64_t end = std::min(begin + window_samples, n);
    double db = rms_dbfs(std::span<const std::int16_t>(audio.samples.data() + begin,
                                                       static_cast<std::size_t>(end - begin)));
    silent[static_cast<std::size_t>(w)] = db < params.silence_threshold_dbfs;
  }
  return silent;
}

}  // namespace

double rms_dbfs(std::span<const std::int16_t> window) {
  if (window.empty()) throw Error(ErrorCode::EmptyWindow, "rms over an empty window");
  double sumsq = 0.0;
  for (std::int16_t s : window) {
    double v = static_cast<double>(s);
    sumsq += v * v;
  }
  double rms = std::sqrt(sumsq / static_cast<double>(window.size()));
  if (rms <= 0.0) return kSilenceFloorDbfs;
  return 20.0 * std::log10(rms / kFullScale);
}

std::vector<SampleInterval> detect_silence_samples(const AudioBuffer& audio,
                                                   const SegmentationParams& params) {
  std::vector<SampleInterval> out;
  const std::int64_t n = audio.size();
  if (n == 0) return out;
  const std::int64_t ws = std::max<std::int64_t>(1, ms_to_samples(params.window_ms, audio.sample_rate));
  const std::int64_t min_len = ms_to_samples(params.min_silence_ms, audio.sample_rate);

  std::vector<bool> silent = silent_windows(audio, params, ws);
  const std::int64_t count = static_cast<std::int64_t>(silent.size());
  std::int64_t w = 0;
  while (w < count) {
    if (!silent[static_cast<std::size_t>(w)]) {
      ++w;
      continue;
    }
    std::int64_t run_start = w;
    while (w < count && silent[static_cast<std::size_t>(w)]) ++w;
    SampleInterval interval{run_start * ws, std::min(w * ws, n)};
    if (interval.end - interval.begin >= min_len) out.push_back(interval);
  }
  return out;
}

std::vector<MsInterval> detect_silence(const AudioBuffer& audio,
                                       const SegmentationParams& params) {
  std::vector<MsInterval> out;
  for (const SampleInterval& iv : detect_silence_samples(audio, params)) {
    out.push_back({samples_to_ms(iv.begin, audio.sample_rate),
                   samples_to_ms(iv.end, audio.sample_rate)});
  }
  return out;
}

std::vector<SegmentSpec> split_on_silence(const AudioBuffer& audio,
                                          const SegmentationParams& params) {
  std::vector<SegmentSpec> out;
  const std::int64_t n = audio.size();
  if (n == 0) return out;
  const std::int64_t ws = std::max<std::int64_t>(1, ms_to_samples(params.window_ms, audio.sample_rate));
  const std::int64_t kb = ms_to_samples(params.keep_buffer_ms, audio.sample_rate);

  std::vector<SampleInterval> silences = detect_silence_samples(audio, params);
  std::vector<bool> silent = silent_windows(audio, params, ws);

  // Non-silent runs: the complement of qualifying silences. Runs made up
  // entirely of silent windows (short, unqualifying silence at the buffer
  // edge) produce no segment.
  std::vector<SampleInterval> runs;
  std::int64_t cursor = 0;
  for (const SampleInterval& sil : silences) {
    if (sil.begin > cursor) runs.push_back({cursor, sil.begin});
    cursor = sil.end;
  }
  if (cursor < n) runs.push_back({cursor, n});

  auto has_loud_window = [&](const SampleInterval& run) {
    std::int64_t first = run.begin / ws;
    std::int64_t last = (run.end - 1) / ws;
    for (std::int64_t w = first; w <= last; ++w)
      if (!silent[static_cast<std::size_t>(w)]) return true;
    return false;
  };
  std::erase_if(runs, [&](const SampleInterval& r) { return !has_loud_window(r); });
  if (runs.empty()) return out;

  // Buffer extensions into adjacent silence. Available silence on the outer
  // edges is whatever precedes the first run / follows the last; between two
  // runs the gap is shared, remainder to the earlier one.
  const std::size_t k = runs.size();
  std::vector<std::int64_t> left(k, 0), right(k, 0);
  left[0] = std::min(kb, runs[0].begin);
  right[k - 1] = std::min(kb, n - runs[k - 1].end);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    std::int64_t gap = runs[i + 1].begin - runs[i].end;
    if (gap >= 2 * kb) {
      right[i] = kb;
      left[i + 1] = kb;
    } else {
      left[i + 1] = gap / 2;
      right[i] = gap - gap / 2;
    }
  }

  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i)
    out.push_back({runs[i].begin - left[i], runs[i].end + right[i]});
  return out;
}

std::string format_segment_listing(const std::string& source_path,
                                   const std::vector<SegmentSpec>& segments,
                                   int sample_rate) {
  std::string out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const SegmentSpec& s = segments[i];
    out += source_path;
    out += '\t';
    out += std::to_string(i);
    out += '\t';
    out += std::to_string(s.start);
    out += '\t';
    out += std::to_string(s.end);
    out += '\t';
    out += format_fixed(static_cast<double>(s.length()) / sample_rate, 3);
    out += '\n';
  }
  return out;
}

}  // namespace nvkit
