#include "cqfb/signal.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cqfb {

Signal::Signal(std::vector<double> samples, int sample_rate)
    : samples_(std::move(samples)), sample_rate_(sample_rate) {
  if (sample_rate_ <= 0) {
    throw std::invalid_argument("Signal: sample_rate must be positive");
  }
  for (double v : samples_) {
    if (!std::isfinite(v)) throw std::invalid_argument("Signal: non-finite sample");
  }
}

std::string_view to_string(Representation rep) {
  switch (rep) {
    case Representation::kCqt: return "cqt";
    case Representation::kCwt: return "cwt";
    case Representation::kMfsc: return "mfsc";
    case Representation::kStft: return "stft";
  }
  return "unknown";
}

Representation representation_from_string(std::string_view name) {
  if (name == "cqt") return Representation::kCqt;
  if (name == "cwt") return Representation::kCwt;
  if (name == "mfsc") return Representation::kMfsc;
  if (name == "stft") return Representation::kStft;
  throw std::invalid_argument("unknown representation: " + std::string(name));
}

TimeFrequencyMatrix::TimeFrequencyMatrix(std::vector<double> values, std::size_t n_frames,
                                         std::vector<double> bin_frequencies,
                                         std::size_t hop_length, int sample_rate,
                                         Representation representation, Flags flags)
    : values_(std::move(values)),
      n_frames_(n_frames),
      bin_frequencies_(std::move(bin_frequencies)),
      hop_length_(hop_length),
      sample_rate_(sample_rate),
      representation_(representation),
      flags_(flags) {
  if (sample_rate_ <= 0) throw std::invalid_argument("TimeFrequencyMatrix: bad sample rate");
  if (hop_length_ == 0) throw std::invalid_argument("TimeFrequencyMatrix: hop_length is zero");
  if (values_.size() != bin_frequencies_.size() * n_frames_) {
    throw std::invalid_argument("TimeFrequencyMatrix: value count != bins * frames");
  }
  const double nyquist = sample_rate_ / 2.0;
  for (std::size_t i = 0; i < bin_frequencies_.size(); ++i) {
    const double f = bin_frequencies_[i];
    if (!std::isfinite(f) || f >= nyquist) {
      throw std::invalid_argument("TimeFrequencyMatrix: bin frequency at or above Nyquist");
    }
    if (i > 0 && !(f > bin_frequencies_[i - 1])) {
      throw std::invalid_argument("TimeFrequencyMatrix: bin frequencies not ascending");
    }
  }
  const bool magnitudes = !flags_.normalized && !flags_.log_domain;
  for (double v : values_) {
    if (!std::isfinite(v) || (magnitudes && v < 0.0)) {
      throw std::invalid_argument("TimeFrequencyMatrix: invalid value " + std::to_string(v));
    }
  }
}

}  // namespace cqfb
