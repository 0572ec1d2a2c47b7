#include "nvkit/audio.hpp"

#include <cstring>
#include <fstream>

#include "nvkit/error.hpp"

namespace nvkit {

namespace {

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

std::int16_t downmix(std::int64_t sum, int channels) {
  // arithmetic mean, rounded half away from zero
  std::int64_t mono = sum >= 0 ? (sum + channels / 2) / channels
                               : -((-sum + channels / 2) / channels);
  if (mono > 32767) mono = 32767;
  if (mono < -32768) mono = -32768;
  return static_cast<std::int16_t>(mono);
}

}  // namespace

AudioBuffer read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::Io, "read failure on " + path.string());
  const auto* bytes = reinterpret_cast<const unsigned char*>(data.data());
  const std::size_t n = data.size();

  if (n < 12 || std::memcmp(bytes, "RIFF", 4) != 0 || std::memcmp(bytes + 8, "WAVE", 4) != 0)
    throw Error(ErrorCode::NotWav, path.string() + " is not a RIFF/WAVE file");

  bool have_fmt = false;
  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t sample_rate = 0;
  const unsigned char* pcm = nullptr;
  std::uint32_t pcm_size = 0;

  std::size_t pos = 12;
  while (pos + 8 <= n) {
    const unsigned char* chunk = bytes + pos;
    std::uint32_t chunk_size = read_u32(chunk + 4);
    const unsigned char* body = chunk + 8;
    if (pos + 8 + chunk_size > n) break;  // truncated trailing chunk
    if (std::memcmp(chunk, "fmt ", 4) == 0 && chunk_size >= 16) {
      format = read_u16(body);
      channels = read_u16(body + 2);
      sample_rate = read_u32(body + 4);
      bits = read_u16(body + 14);
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      pcm = body;
      pcm_size = chunk_size;
    }
    pos += 8 + chunk_size + (chunk_size & 1);  // chunks are word-aligned
  }

  if (!have_fmt || pcm == nullptr)
    throw Error(ErrorCode::NotWav, path.string() + " lacks fmt/data chunks");
  if (format != 1)
    throw Error(ErrorCode::UnsupportedEncoding,
                path.string() + ": only PCM (format 1) is supported");
  if (bits != 16)
    throw Error(ErrorCode::UnsupportedEncoding,
                path.string() + ": only 16-bit samples are supported");
  if (channels == 0 || sample_rate == 0)
    throw Error(ErrorCode::NotWav, path.string() + ": bad fmt chunk");

  AudioBuffer out;
  out.sample_rate = static_cast<int>(sample_rate);
  const std::size_t frame_bytes = 2u * channels;
  const std::size_t frames = pcm_size / frame_bytes;
  out.samples.reserve(frames);
  for (std::size_t f = 0; f < frames; ++f) {
    std::int64_t sum = 0;
    for (std::uint16_t c = 0; c < channels; ++c) {
      const unsigned char* sp = pcm + f * frame_bytes + 2u * c;
      sum += static_cast<std::int16_t>(sp[0] | (sp[1] << 8));
    }
    out.samples.push_back(channels == 1 ? static_cast<std::int16_t>(sum)
                                        : downmix(sum, channels));
  }
  return out;
}

void write_wav(const std::filesystem::path& path, const AudioBuffer& audio) {
  const std::uint32_t data_size = static_cast<std::uint32_t>(audio.samples.size() * 2);
  std::string out;
  out.reserve(44 + data_size);
  out += "RIFF";
  put_u32(out, 36 + data_size);
  out += "WAVEfmt ";
  put_u32(out, 16);
  put_u16(out, 1);  // PCM
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<std::uint32_t>(audio.sample_rate));
  put_u32(out, static_cast<std::uint32_t>(audio.sample_rate) * 2);
  put_u16(out, 2);   // block align
  put_u16(out, 16);  // bits per sample
  out += "data";
  put_u32(out, data_size);
  for (std::int16_t s : audio.samples) {
    out.push_back(static_cast<char>(static_cast<std::uint16_t>(s) & 0xff));
    out.push_back(static_cast<char>((static_cast<std::uint16_t>(s) >> 8) & 0xff));
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw Error(ErrorCode::Io, "write failure on " + path.string());
}

}  // namespace nvkit
