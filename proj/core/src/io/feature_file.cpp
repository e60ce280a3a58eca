#include "cqfb/io/feature_file.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "cqfb/error.hpp"

namespace cqfb::io {
namespace {

template <typename T>
void put_le(std::ostream& out, T v) {
  std::array<char, sizeof(T)> b{};
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    b[i] = static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xFF);
  }
  out.write(b.data(), b.size());
}

template <typename T>
T get_le(const unsigned char* p) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return static_cast<T>(v);
}

void read_exact(std::istream& in, unsigned char* dst, std::size_t n, const char* what) {
  in.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in.gcount()) != n) {
    throw FormatError(std::string("cqfb: truncated ") + what);
  }
}

std::uint8_t encode_flags(TimeFrequencyMatrix::Flags f) {
  return static_cast<std::uint8_t>((f.normalized ? 1u : 0u) | (f.log_domain ? 2u : 0u));
}

}  // namespace

FeatureFileHeader make_header(const TimeFrequencyMatrix& m) {
  FeatureFileHeader h;
  h.representation = m.representation();
  h.flags = encode_flags(m.flags());
  h.n_bins = static_cast<std::uint32_t>(m.n_bins());
  h.n_frames = static_cast<std::uint32_t>(m.n_frames());
  h.sample_rate = static_cast<std::uint32_t>(m.sample_rate());
  h.hop_length = static_cast<std::uint32_t>(m.hop_length());
  return h;
}

void write_cqfb(std::ostream& out, const TimeFrequencyMatrix& m) {
  const auto h = make_header(m);
  out.write("CQFB", 4);
  put_le<std::uint16_t>(out, h.version);
  put_le<std::uint8_t>(out, static_cast<std::uint8_t>(h.representation));
  put_le<std::uint8_t>(out, h.flags);
  put_le<std::uint32_t>(out, h.n_bins);
  put_le<std::uint32_t>(out, h.n_frames);
  put_le<std::uint32_t>(out, h.sample_rate);
  put_le<std::uint32_t>(out, h.hop_length);
  for (double v : m.values()) {
    const float f = static_cast<float>(v);
    std::uint32_t bits;
    std::memcpy(&bits, &f, sizeof bits);
    put_le<std::uint32_t>(out, bits);
  }
  for (double f : m.bin_frequencies()) {
    std::uint64_t bits;
    std::memcpy(&bits, &f, sizeof bits);
    put_le<std::uint64_t>(out, bits);
  }
}

void write_cqfb(const std::filesystem::path& path, const TimeFrequencyMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cqfb: cannot open " + path.string() + " for writing");
  write_cqfb(out, m);
  if (!out) throw std::runtime_error("cqfb: write failed for " + path.string());
}

FeatureFileHeader read_cqfb_header(std::istream& in) {
  std::array<unsigned char, kCqfbHeaderSize> b{};
  read_exact(in, b.data(), b.size(), "header");
  if (std::memcmp(b.data(), "CQFB", 4) != 0) throw FormatError("cqfb: bad magic");
  FeatureFileHeader h;
  h.version = get_le<std::uint16_t>(b.data() + 4);
  if (h.version != kCqfbVersion) {
    throw FormatError("cqfb: unsupported version " + std::to_string(h.version));
  }
  const std::uint8_t tag = b[6];
  if (tag < 1 || tag > 4) throw FormatError("cqfb: unknown representation tag " + std::to_string(tag));
  h.representation = static_cast<Representation>(tag);
  h.flags = b[7];
  if (h.flags & ~3u) throw FormatError("cqfb: unknown flag bits");
  h.n_bins = get_le<std::uint32_t>(b.data() + 8);
  h.n_frames = get_le<std::uint32_t>(b.data() + 12);
  h.sample_rate = get_le<std::uint32_t>(b.data() + 16);
  h.hop_length = get_le<std::uint32_t>(b.data() + 20);
  return h;
}

TimeFrequencyMatrix read_cqfb(std::istream& in) {
  const auto h = read_cqfb_header(in);
  const std::size_t count = static_cast<std::size_t>(h.n_bins) * h.n_frames;
  std::vector<unsigned char> payload(count * 4 + static_cast<std::size_t>(h.n_bins) * 8);
  read_exact(in, payload.data(), payload.size(), "payload");
  if (in.peek() != std::char_traits<char>::eof()) {
    throw FormatError("cqfb: trailing bytes after payload");
  }
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto bits = get_le<std::uint32_t>(payload.data() + 4 * i);
    float f;
    std::memcpy(&f, &bits, sizeof f);
    values[i] = static_cast<double>(f);
  }
  std::vector<double> freqs(h.n_bins);
  const unsigned char* trailer = payload.data() + 4 * count;
  for (std::size_t b = 0; b < h.n_bins; ++b) {
    const auto bits = get_le<std::uint64_t>(trailer + 8 * b);
    std::memcpy(&freqs[b], &bits, sizeof bits);
  }
  TimeFrequencyMatrix::Flags flags;
  flags.normalized = (h.flags & 1u) != 0;
  flags.log_domain = (h.flags & 2u) != 0;
  try {
    return TimeFrequencyMatrix(std::move(values), h.n_frames, std::move(freqs), h.hop_length,
                               static_cast<int>(h.sample_rate), h.representation, flags);
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("cqfb: inconsistent contents: ") + e.what());
  }
}

TimeFrequencyMatrix read_cqfb(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cqfb: cannot open " + path.string());
  return read_cqfb(in);
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), r.ptr);
}

std::string format_number(float v) {
  std::array<char, 64> buf{};
  const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), r.ptr);
}

void write_feature_csv(std::ostream& out, const TimeFrequencyMatrix& m) {
  out << "bin_hz";
  for (std::size_t t = 0; t < m.n_frames(); ++t) out << ",frame_" << t;
  out << '\n';
  const auto freqs = m.bin_frequencies();
  for (std::size_t b = 0; b < m.n_bins(); ++b) {
    out << format_number(freqs[b]);
    for (double v : m.row(b)) out << ',' << format_number(static_cast<float>(v));
    out << '\n';
  }
}

void write_feature_csv(const std::filesystem::path& path, const TimeFrequencyMatrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("csv: cannot open " + path.string() + " for writing");
  write_feature_csv(out, m);
  if (!out) throw std::runtime_error("csv: write failed for " + path.string());
}

}  // namespace cqfb::io
