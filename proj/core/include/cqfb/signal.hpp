#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace cqfb {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Mono real-valued signal with its sampling rate in Hz.
///
/// Construction validates that the rate is positive and that every sample is
/// finite; instances are immutable afterwards.
class Signal {
 public:
  Signal(std::vector<double> samples, int sample_rate);

  std::span<const double> samples() const noexcept { return samples_; }
  int sample_rate() const noexcept { return sample_rate_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }
  double duration() const noexcept {
    return static_cast<double>(samples_.size()) / sample_rate_;
  }
  double operator[](std::size_t i) const { return samples_[i]; }

 private:
  std::vector<double> samples_;
  int sample_rate_;
};

/// Front-end that produced a TimeFrequencyMatrix. The numeric values are the
/// representation tags of the CQFB file header.
enum class Representation : std::uint8_t { kCqt = 1, kCwt = 2, kMfsc = 3, kStft = 4 };

std::string_view to_string(Representation rep);
/// Parses "cqt", "cwt", "mfsc" or "stft" (case-sensitive).
Representation representation_from_string(std::string_view name);

/// Processing applied to a matrix: CMVN (normalized) and/or log compression.
struct MatrixFlags {
  bool normalized = false;
  bool log_domain = false;
  friend bool operator==(const MatrixFlags&, const MatrixFlags&) = default;
};

/// bins x frames real matrix with frequency and framing metadata.
///
/// Values are stored row-major (bins outer, frames inner). Unless the matrix is
/// flagged as normalized (CMVN) or log-domain, every value must be a finite
/// non-negative magnitude.
class TimeFrequencyMatrix {
 public:
  using Flags = MatrixFlags;

  TimeFrequencyMatrix(std::vector<double> values, std::size_t n_frames,
                      std::vector<double> bin_frequencies, std::size_t hop_length,
                      int sample_rate, Representation representation, Flags flags = {});

  std::size_t n_bins() const noexcept { return bin_frequencies_.size(); }
  std::size_t n_frames() const noexcept { return n_frames_; }
  std::size_t hop_length() const noexcept { return hop_length_; }
  int sample_rate() const noexcept { return sample_rate_; }
  Representation representation() const noexcept { return representation_; }
  Flags flags() const noexcept { return flags_; }

  std::span<const double> bin_frequencies() const noexcept { return bin_frequencies_; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> row(std::size_t bin) const {
    return std::span<const double>(values_).subspan(bin * n_frames_, n_frames_);
  }
  double at(std::size_t bin, std::size_t frame) const {
    return values_[bin * n_frames_ + frame];
  }

  friend bool operator==(const TimeFrequencyMatrix&, const TimeFrequencyMatrix&) = default;

 private:
  std::vector<double> values_;
  std::size_t n_frames_;
  std::vector<double> bin_frequencies_;
  std::size_t hop_length_;
  int sample_rate_;
  Representation representation_;
  Flags flags_;
};

}  // namespace cqfb
