#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "cqfb/signal.hpp"

namespace cqfb::io {

enum class WavEncoding { kPcm8, kPcm16, kPcm24, kPcm32, kFloat32 };

struct WavAudio {
  int sample_rate = 0;
  WavEncoding encoding = WavEncoding::kPcm16;
  std::vector<std::vector<double>> channels;  ///< samples scaled to [-1, 1)
};

/// Parses a RIFF/WAVE stream: PCM 8/16/24/32-bit integer or 32-bit IEEE float,
/// plain or WAVE_FORMAT_EXTENSIBLE. Throws FormatError for anything else.
WavAudio read_wav(std::istream& in);
WavAudio read_wav(const std::filesystem::path& path);

/// Channel average of a decoded file.
Signal mixdown(const WavAudio& audio);

/// Writes one or more equal-length channels. Integer encodings clip to [-1, 1].
void write_wav(std::ostream& out, const WavAudio& audio);
void write_wav(const std::filesystem::path& path, const WavAudio& audio);
void write_wav(const std::filesystem::path& path, const Signal& mono,
               WavEncoding encoding = WavEncoding::kPcm16);

}  // namespace cqfb::io
