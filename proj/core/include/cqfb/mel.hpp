#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cqfb/signal.hpp"

namespace cqfb {

/// STFT and mel filterbank settings (320-sample Hann frames, hop 64, 512-point
/// FFT, 24 filters over 0 Hz .. Nyquist at 16 kHz by default).
struct MelParams {
  std::size_t win_length = 320;
  std::size_t hop_length = 64;
  std::size_t n_fft = 512;
  std::size_t n_filters = 24;
  double f_low = 0.0;
  std::optional<double> f_high;  ///< defaults to sample_rate / 2
  double log_floor = 1e-10;
  bool apply_log = true;
  int sample_rate = 16000;

  double upper_edge() const noexcept { return f_high.value_or(sample_rate / 2.0); }
  std::size_t n_spectrum_bins() const noexcept { return n_fft / 2 + 1; }
  void validate() const;
};

double hz_to_mel(double hz) noexcept;  ///< 2595 log10(1 + f / 700)
double mel_to_hz(double mel) noexcept;

/// One-sided spectra of Hann-windowed frames starting at m * hop, zero padded
/// to n_fft. Row-major (n_fft/2 + 1) x n_frames.
struct StftResult {
  std::size_t n_bins = 0;
  std::size_t n_frames = 0;
  ComplexVector values;

  Complex at(std::size_t bin, std::size_t frame) const { return values[bin * n_frames + frame]; }
};

StftResult stft(const Signal& s, const MelParams& p);

/// |STFT| as a TimeFrequencyMatrix; row r is FFT bin r. The Nyquist bin is
/// dropped so every bin frequency stays below fs/2.
TimeFrequencyMatrix stft_magnitude(const Signal& s, const MelParams& p);

/// n_filters x (n_fft/2 + 1) triangular filters, row-major, each with a peak
/// value of 1, centres equally spaced on the mel scale.
struct MelFilterbank {
  std::size_t n_filters = 0;
  std::size_t n_bins = 0;
  std::vector<double> weights;
  std::vector<double> centers_hz;  ///< ascending
  std::vector<double> edges_hz;    ///< n_filters + 2 triangle corners

  double at(std::size_t filter, std::size_t bin) const { return weights[filter * n_bins + bin]; }
};

MelFilterbank mel_filterbank(const MelParams& p);

/// filterbank * |STFT|^2, then ln(. + log_floor) when apply_log.
TimeFrequencyMatrix mfsc(const Signal& s, const MelParams& p);

}  // namespace cqfb
