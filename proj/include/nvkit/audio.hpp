#ifndef NVKIT_AUDIO_HPP
#define NVKIT_AUDIO_HPP

#include <cstdint>
#include <filesystem>
#include <vector>

namespace nvkit {

// Mono signed 16-bit PCM.
struct AudioBuffer {
  std::vector<std::int16_t> samples;
  int sample_rate = 22050;

  std::int64_t size() const { return static_cast<std::int64_t>(samples.size()); }
  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

// RIFF/WAVE, PCM, 16-bit. Multi-channel inputs are downmixed to mono by
// per-sample averaging (rounded half away from zero).
// Errors: NotWav, UnsupportedEncoding, Io.
AudioBuffer read_wav(const std::filesystem::path& path);

// Mono 16-bit PCM; write-then-read is bit-exact.
void write_wav(const std::filesystem::path& path, const AudioBuffer& audio);

}  // namespace nvkit

#endif  // NVKIT_AUDIO_HPP
