#include "nvkit/render.hpp"

#include <cmath>
#include <numbers>

#include "nvkit/util.hpp"

namespace nvkit {

namespace {

struct Burst {
  std::int64_t duration_ms;
  double tone_hz;
};

std::vector<Burst> plan_token(const NvToken& token, const RenderParams& params) {
  std::vector<Burst> plan;
  const double hz = params.tone_hz(token.style);
  if (token.kind == UnitKind::Discrete) {
    for (int i = 0; i < token.count; ++i) plan.push_back({token.duration_ms, hz});
  } else {
    plan.push_back({token.duration_ms, hz});
  }
  return plan;
}

void append_burst(AudioBuffer& out, const Burst& burst, const RenderParams& params) {
  const std::int64_t ns = ms_to_samples(static_cast<double>(burst.duration_ms),
                                        params.sample_rate);
  const std::int64_t fade = std::min(ms_to_samples(params.fade_ms, params.sample_rate), ns / 2);
  const double amp = 32767.0 * std::pow(10.0, params.burst_amplitude_dbfs / 20.0);
  const double w = 2.0 * std::numbers::pi * burst.tone_hz / params.sample_rate;
  for (std::int64_t k = 0; k < ns; ++k) {
    double env = 1.0;
    if (k < fade) env = static_cast<double>(k) / fade;
    else if (k >= ns - fade) env = static_cast<double>(ns - 1 - k) / fade;
    double v = amp * env * std::sin(w * static_cast<double>(k));
    out.samples.push_back(static_cast<std::int16_t>(std::lrint(v)));
  }
}

AudioBuffer assemble(const std::vector<Burst>& plan, const RenderParams& params) {
  AudioBuffer out;
  out.sample_rate = params.sample_rate;
  const std::int64_t gap = ms_to_samples(params.gap_ms, params.sample_rate);
  for (std::size_t i = 0; i < plan.size(); ++i) {
    if (i) out.samples.insert(out.samples.end(), static_cast<std::size_t>(gap), 0);
    append_burst(out, plan[i], params);
  }
  return out;
}

}  // namespace

double RenderParams::tone_hz(NvStyle style) const {
  switch (style) {
    case NvStyle::Cheering: return 880.0;
    case NvStyle::Yelling: return 660.0;
    case NvStyle::LaughterOpen:
    case NvStyle::LaughterClosed: return 523.0;
    case NvStyle::Crying: return 392.0;
    case NvStyle::Screaming: return 1046.0;
  }
  return verbal_tone_hz;
}

AudioBuffer render_token(const NvToken& token, const RenderParams& params) {
  return assemble(plan_token(token, params), params);
}

AudioBuffer render_transcript(const Lexicon& lexicon, const AnnotatedTranscript& t,
                              const RenderParams& params) {
  TokenStream stream = encode_tokens(lexicon, t);
  std::vector<Burst> plan;
  for (const StreamElement& e : stream.elements) {
    if (const auto* v = std::get_if<VerbalSpan>(&e)) {
      for (std::size_t i = 0; i < split_whitespace(v->text).size(); ++i)
        plan.push_back({static_cast<std::int64_t>(params.verbal_word_ms), params.verbal_tone_hz});
    } else {
      for (const Burst& b : plan_token(std::get<NvToken>(e), params)) plan.push_back(b);
    }
  }
  return assemble(plan, params);
}

std::vector<double> recover(const AudioBuffer& audio, const SegmentationParams& params) {
  std::vector<double> out;
  const std::int64_t kb = ms_to_samples(params.keep_buffer_ms, audio.sample_rate);
  for (const SegmentSpec& seg : split_on_silence(audio, params)) {
    std::int64_t len = seg.length();
    if (seg.start > 0) len -= kb;
    if (seg.end < audio.size()) len -= kb;
    if (len < 0) len = 0;
    out.push_back(static_cast<double>(len) / audio.sample_rate);
  }
  return out;
}

}  // namespace nvkit
