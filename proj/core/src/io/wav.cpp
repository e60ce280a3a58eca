#include "cqfb/io/wav.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>

#include "cqfb/error.hpp"

namespace cqfb::io {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint32_t le32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}
std::uint16_t le16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put16(std::ostream& out, std::uint16_t v) {
  const char b[2] = {static_cast<char>(v & 0xFF), static_cast<char>(v >> 8)};
  out.write(b, 2);
}
void put32(std::ostream& out, std::uint32_t v) {
  const char b[4] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
                     static_cast<char>((v >> 16) & 0xFF), static_cast<char>((v >> 24) & 0xFF)};
  out.write(b, 4);
}

int bytes_per_sample(WavEncoding e) {
  switch (e) {
    case WavEncoding::kPcm8: return 1;
    case WavEncoding::kPcm16: return 2;
    case WavEncoding::kPcm24: return 3;
    case WavEncoding::kPcm32:
    case WavEncoding::kFloat32: return 4;
  }
  return 0;
}

double decode_sample(const unsigned char* p, WavEncoding e) {
  switch (e) {
    case WavEncoding::kPcm8: return (static_cast<double>(p[0]) - 128.0) / 128.0;
    case WavEncoding::kPcm16: return static_cast<std::int16_t>(le16(p)) / 32768.0;
    case WavEncoding::kPcm24: {
      std::int32_t v = static_cast<std::int32_t>(p[0] | (p[1] << 8) | (p[2] << 16));
      if (v & 0x800000) v -= 0x1000000;
      return v / 8388608.0;
    }
    case WavEncoding::kPcm32: return static_cast<std::int32_t>(le32(p)) / 2147483648.0;
    case WavEncoding::kFloat32: {
      const std::uint32_t bits = le32(p);
      float f;
      std::memcpy(&f, &bits, sizeof f);
      return static_cast<double>(f);
    }
  }
  return 0.0;
}

void encode_sample(std::ostream& out, double v, WavEncoding e) {
  if (e == WavEncoding::kFloat32) {
    const float f = static_cast<float>(v);
    std::uint32_t bits;
    std::memcpy(&bits, &f, sizeof bits);
    put32(out, bits);
    return;
  }
  v = std::clamp(v, -1.0, 1.0);
  switch (e) {
    case WavEncoding::kPcm8:
      out.put(static_cast<char>(std::clamp(std::lround(v * 128.0 + 128.0), 0L, 255L)));
      break;
    case WavEncoding::kPcm16:
      put16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(
                     std::clamp(std::lround(v * 32768.0), -32768L, 32767L))));
      break;
    case WavEncoding::kPcm24: {
      const auto q = static_cast<std::int32_t>(std::clamp(std::lround(v * 8388608.0), -8388608L, 8388607L));
      const auto u = static_cast<std::uint32_t>(q);
      const char b[3] = {static_cast<char>(u & 0xFF), static_cast<char>((u >> 8) & 0xFF),
                         static_cast<char>((u >> 16) & 0xFF)};
      out.write(b, 3);
      break;
    }
    case WavEncoding::kPcm32:
      put32(out, static_cast<std::uint32_t>(static_cast<std::int32_t>(
                     std::clamp(std::llround(v * 2147483648.0), -2147483648LL, 2147483647LL))));
      break;
    case WavEncoding::kFloat32: break;
  }
}

}  // namespace

WavAudio read_wav(std::istream& in) {
  const std::vector<unsigned char> bytes{std::istreambuf_iterator<char>(in),
                                         std::istreambuf_iterator<char>()};
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw FormatError("wav: not a RIFF/WAVE stream");
  }
  bool have_fmt = false;
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t rate = 0;
  std::uint16_t bits = 0;
  const unsigned char* data = nullptr;
  std::size_t data_size = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* chunk = bytes.data() + pos;
    const std::size_t size = le32(chunk + 4);
    const std::size_t body = pos + 8;
    const std::size_t avail = bytes.size() - body;
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size < 16 || size > avail) throw FormatError("wav: truncated fmt chunk");
      const unsigned char* f = bytes.data() + body;
      format = le16(f);
      channels = le16(f + 2);
      rate = le32(f + 4);
      bits = le16(f + 14);
      if (format == kFormatExtensible) {
        if (size < 26) throw FormatError("wav: truncated extensible fmt chunk");
        format = le16(f + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = bytes.data() + body;
      data_size = std::min(size, avail);
    }
    pos = body + size + (size & 1);
  }
  if (!have_fmt) throw FormatError("wav: missing fmt chunk");
  if (data == nullptr) throw FormatError("wav: missing data chunk");
  if (channels == 0 || rate == 0) throw FormatError("wav: invalid channel count or rate");

  WavAudio audio;
  audio.sample_rate = static_cast<int>(rate);
  if (format == kFormatPcm && bits == 8) audio.encoding = WavEncoding::kPcm8;
  else if (format == kFormatPcm && bits == 16) audio.encoding = WavEncoding::kPcm16;
  else if (format == kFormatPcm && bits == 24) audio.encoding = WavEncoding::kPcm24;
  else if (format == kFormatPcm && bits == 32) audio.encoding = WavEncoding::kPcm32;
  else if (format == kFormatFloat && bits == 32) audio.encoding = WavEncoding::kFloat32;
  else {
    throw FormatError("wav: unsupported encoding (format " + std::to_string(format) + ", " +
                      std::to_string(bits) + " bits)");
  }
  const std::size_t width = static_cast<std::size_t>(bytes_per_sample(audio.encoding));
  const std::size_t frame = width * channels;
  const std::size_t n = data_size / frame;
  audio.channels.assign(channels, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < channels; ++c) {
      audio.channels[c][i] = decode_sample(data + i * frame + c * width, audio.encoding);
    }
  }
  return audio;
}

WavAudio read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("wav: cannot open " + path.string());
  return read_wav(in);
}

Signal mixdown(const WavAudio& audio) {
  if (audio.channels.empty()) throw FormatError("wav: no channels");
  const std::size_t n = audio.channels.front().size();
  std::vector<double> mono(n, 0.0);
  for (const auto& ch : audio.channels) {
    for (std::size_t i = 0; i < n; ++i) mono[i] += ch[i];
  }
  const double scale = 1.0 / static_cast<double>(audio.channels.size());
  for (double& v : mono) v *= scale;
  return Signal(std::move(mono), audio.sample_rate);
}

void write_wav(std::ostream& out, const WavAudio& audio) {
  if (audio.channels.empty()) throw std::invalid_argument("write_wav: no channels");
  const std::size_t n = audio.channels.front().size();
  for (const auto& ch : audio.channels) {
    if (ch.size() != n) throw std::invalid_argument("write_wav: channel lengths differ");
  }
  const auto channels = static_cast<std::uint16_t>(audio.channels.size());
  const auto width = static_cast<std::uint16_t>(bytes_per_sample(audio.encoding));
  const std::uint32_t data_size = static_cast<std::uint32_t>(n * channels * width);
  out.write("RIFF", 4);
  put32(out, 36 + data_size + (data_size & 1));
  out.write("WAVEfmt ", 8);
  put32(out, 16);
  put16(out, audio.encoding == WavEncoding::kFloat32 ? kFormatFloat : kFormatPcm);
  put16(out, channels);
  put32(out, static_cast<std::uint32_t>(audio.sample_rate));
  put32(out, static_cast<std::uint32_t>(audio.sample_rate) * channels * width);
  put16(out, static_cast<std::uint16_t>(channels * width));
  put16(out, static_cast<std::uint16_t>(width * 8));
  out.write("data", 4);
  put32(out, data_size);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& ch : audio.channels) encode_sample(out, ch[i], audio.encoding);
  }
  if (data_size & 1) out.put('\0');
}

void write_wav(const std::filesystem::path& path, const WavAudio& audio) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_wav: cannot open " + path.string());
  write_wav(out, audio);
}

void write_wav(const std::filesystem::path& path, const Signal& mono, WavEncoding encoding) {
  WavAudio audio;
  audio.sample_rate = mono.sample_rate();
  audio.encoding = encoding;
  audio.channels.emplace_back(mono.samples().begin(), mono.samples().end());
  write_wav(path, audio);
}

}  // namespace cqfb::io
