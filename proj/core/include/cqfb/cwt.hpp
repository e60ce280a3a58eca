#pragma once

#include <cstddef>
#include <vector>

#include "cqfb/signal.hpp"

namespace cqfb {

/// Complex Morlet CWT configuration. Defaults reproduce the 24 dyadic scales
/// 2^(k/3), k = 3..26, with 320-sample frames every 64 samples at 16 kHz.
struct CwtParams {
  std::vector<double> scales = dyadic_scales(3, 26, 3);
  double bandwidth = 1.0;         ///< Morlet B: envelope exp(-t^2 / B)
  double center_frequency = 1.0;  ///< Morlet C: cycles per unit scale
  std::size_t frame_length = 320;
  std::size_t hop_length = 64;
  int sample_rate = 16000;

  /// scales[i] = 2^(k / voices) for k = k_first .. k_last.
  static std::vector<double> dyadic_scales(int k_first, int k_last, int voices);

  void validate() const;
};

/// Sampled psi((t)/a)/sqrt(a), psi(t) = (pi B)^(-1/2) exp(2 pi i C t) exp(-t^2 / B),
/// for integer t in [-floor(4 a sqrt(B)), +floor(4 a sqrt(B))]. Requires scale >= 1.
ComplexVector morlet_wavelet(double scale, const CwtParams& p);

/// Half-width h of the sampled support; the wavelet has 2h + 1 samples.
std::size_t morlet_half_width(double scale, const CwtParams& p);

/// Centre frequency in Hz of the wavelet at `scale`: C fs / a.
double scale_to_frequency(double scale, const CwtParams& p);

/// Dense coefficients W[j][b] = sum_t x[t] conj(psi_j(t - b)), one row per
/// entry of p.scales (in the order given), "same" alignment, zero padding.
struct CwtCoefficients {
  std::size_t n_scales = 0;
  std::size_t n_samples = 0;
  ComplexVector values;  ///< row-major, n_scales x n_samples

  Complex at(std::size_t scale, std::size_t t) const { return values[scale * n_samples + t]; }
};

CwtCoefficients cwt_raw(const Signal& s, const CwtParams& p);

/// Bin frequencies of the framed CWT, ascending. A row landing exactly on
/// Nyquist is placed at 0.999 Nyquist.
std::vector<double> cwt_bin_frequencies(const CwtParams& p);

/// Per frame m, the sum of |W| over samples [m hop, m hop + frame_length);
/// rows ordered by ascending frequency; 1 + (len - frame_length) / hop frames.
TimeFrequencyMatrix cwt_framed(const Signal& s, const CwtParams& p);

}  // namespace cqfb
