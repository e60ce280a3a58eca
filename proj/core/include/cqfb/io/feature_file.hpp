#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "cqfb/signal.hpp"

namespace cqfb::io {

/// CQFB binary layout (all fields little-endian):
///
///   offset  size  field
///        0     4  magic "CQFB"
///        4     2  version (1)
///        6     1  representation tag (1 CQT, 2 CWT, 3 MFSC, 4 STFT)
///        7     1  flags (bit 0 CMVN applied, bit 1 log domain)
///        8     4  n_bins
///       12     4  n_frames
///       16     4  sample_rate (Hz)
///       20     4  hop_length (samples)
///       24     -  n_bins * n_frames float32, bins outer, frames inner
///        -     -  n_bins float64 bin frequencies (Hz)
inline constexpr std::uint16_t kCqfbVersion = 1;
inline constexpr std::size_t kCqfbHeaderSize = 24;

struct FeatureFileHeader {
  std::uint16_t version = kCqfbVersion;
  Representation representation = Representation::kCqt;
  std::uint8_t flags = 0;
  std::uint32_t n_bins = 0;
  std::uint32_t n_frames = 0;
  std::uint32_t sample_rate = 0;
  std::uint32_t hop_length = 0;
};

FeatureFileHeader make_header(const TimeFrequencyMatrix& m);

void write_cqfb(std::ostream& out, const TimeFrequencyMatrix& m);
void write_cqfb(const std::filesystem::path& path, const TimeFrequencyMatrix& m);

/// Throws FormatError on a bad magic, unknown version or tag, or a length that
/// does not match the header.
TimeFrequencyMatrix read_cqfb(std::istream& in);
TimeFrequencyMatrix read_cqfb(const std::filesystem::path& path);
FeatureFileHeader read_cqfb_header(std::istream& in);

/// Header row "bin_hz,frame_0,...", then one row per bin: the bin frequency
/// followed by the frame values rounded to float32 (shortest round-trip form).
void write_feature_csv(std::ostream& out, const TimeFrequencyMatrix& m);
void write_feature_csv(const std::filesystem::path& path, const TimeFrequencyMatrix& m);

/// Shortest decimal form that reads back as the same value.
std::string format_number(double v);
std::string format_number(float v);

}  // namespace cqfb::io
