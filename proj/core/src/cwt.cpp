#include "cqfb/cwt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "cqfb/fft.hpp"

namespace cqfb {

std::vector<double> CwtParams::dyadic_scales(int k_first, int k_last, int voices) {
  if (voices <= 0 || k_last < k_first) throw std::invalid_argument("dyadic_scales: bad range");
  std::vector<double> s;
  for (int k = k_first; k <= k_last; ++k) s.push_back(std::pow(2.0, static_cast<double>(k) / voices));
  return s;
}

void CwtParams::validate() const {
  if (sample_rate <= 0) throw std::invalid_argument("CwtParams: sample_rate must be positive");
  if (scales.empty()) throw std::invalid_argument("CwtParams: no scales");
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (!(scales[i] > 1.0)) throw std::invalid_argument("CwtParams: scales must be > 1");
    if (i > 0 && !(scales[i] > scales[i - 1])) {
      throw std::invalid_argument("CwtParams: scales must be strictly ascending");
    }
  }
  if (!(bandwidth > 0.0) || !(center_frequency > 0.0)) {
    throw std::invalid_argument("CwtParams: Morlet parameters must be positive");
  }
  if (center_frequency / scales.front() > 0.5) {
    throw std::invalid_argument("CwtParams: smallest scale maps above Nyquist");
  }
  if (hop_length == 0 || frame_length <= hop_length) {
    throw std::invalid_argument("CwtParams: need frame_length > hop_length >= 1");
  }
}

std::size_t morlet_half_width(double scale, const CwtParams& p) {
  if (!(scale >= 1.0)) throw std::invalid_argument("morlet_wavelet: scale must be >= 1");
  return static_cast<std::size_t>(std::floor(4.0 * scale * std::sqrt(p.bandwidth)));
}

ComplexVector morlet_wavelet(double scale, const CwtParams& p) {
  const std::size_t half = morlet_half_width(scale, p);
  const double norm = 1.0 / std::sqrt(std::numbers::pi * p.bandwidth) / std::sqrt(scale);
  ComplexVector psi(2 * half + 1);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double t = (static_cast<double>(i) - static_cast<double>(half)) / scale;
    psi[i] = norm * std::exp(-t * t / p.bandwidth) *
             std::polar(1.0, 2.0 * std::numbers::pi * p.center_frequency * t);
  }
  return psi;
}

double scale_to_frequency(double scale, const CwtParams& p) {
  return p.center_frequency * p.sample_rate / scale;
}

CwtCoefficients cwt_raw(const Signal& s, const CwtParams& p) {
  p.validate();
  if (s.sample_rate() != p.sample_rate) {
    throw std::invalid_argument("cwt_raw: signal rate does not match CwtParams::sample_rate");
  }
  const std::size_t n = s.size();
  const std::size_t longest = 2 * morlet_half_width(p.scales.back(), p) + 1;
  if (n <= longest) {
    throw std::invalid_argument("cwt_raw: signal shorter than the longest wavelet support");
  }
  const std::size_t fft_len = next_pow2(n + morlet_half_width(p.scales.back(), p) + 1);

  FftPlan forward(fft_len, FftDirection::kForward);
  FftPlan inverse(fft_len, FftDirection::kInverse);
  ComplexVector buf(fft_len);
  ComplexVector sig_spec(fft_len);
  for (std::size_t i = 0; i < n; ++i) buf[i] = s[i];
  forward.execute(buf, sig_spec);

  CwtCoefficients out;
  out.n_scales = p.scales.size();
  out.n_samples = n;
  out.values.resize(out.n_scales * n);
  ComplexVector psi_spec(fft_len);
  const double inv_len = 1.0 / static_cast<double>(fft_len);
  for (std::size_t j = 0; j < p.scales.size(); ++j) {
    const auto psi = morlet_wavelet(p.scales[j], p);
    const auto half = static_cast<std::ptrdiff_t>(psi.size() / 2);
    std::fill(buf.begin(), buf.end(), Complex{});
    for (std::size_t i = 0; i < psi.size(); ++i) {
      const std::ptrdiff_t tau = static_cast<std::ptrdiff_t>(i) - half;
      buf[static_cast<std::size_t>(tau < 0 ? tau + static_cast<std::ptrdiff_t>(fft_len) : tau)] = psi[i];
    }
    forward.execute(buf, psi_spec);
    // Cross-correlation: IDFT(X conj(Psi))[b] = sum_t x[t] conj(psi[t - b]).
    for (std::size_t f = 0; f < fft_len; ++f) psi_spec[f] = sig_spec[f] * std::conj(psi_spec[f]);
    inverse.execute(psi_spec, buf);
    for (std::size_t b = 0; b < n; ++b) out.values[j * n + b] = buf[b] * inv_len;
  }
  return out;
}

std::vector<double> cwt_bin_frequencies(const CwtParams& p) {
  p.validate();
  const double nyquist = p.sample_rate / 2.0;
  std::vector<double> f;
  for (auto it = p.scales.rbegin(); it != p.scales.rend(); ++it) {
    double v = scale_to_frequency(*it, p);
    if (v >= nyquist) v = 0.999 * nyquist;
    f.push_back(v);
  }
  return f;
}

TimeFrequencyMatrix cwt_framed(const Signal& s, const CwtParams& p) {
  const auto raw = cwt_raw(s, p);
  const std::size_t n = raw.n_samples;
  if (n < p.frame_length) throw std::invalid_argument("cwt_framed: signal shorter than one frame");
  const std::size_t n_frames = 1 + (n - p.frame_length) / p.hop_length;
  const std::size_t n_rows = raw.n_scales;
  std::vector<double> out(n_rows * n_frames);
  std::vector<double> prefix(n + 1);
  for (std::size_t j = 0; j < n_rows; ++j) {
    prefix[0] = 0.0;
    for (std::size_t t = 0; t < n; ++t) prefix[t + 1] = prefix[t] + std::abs(raw.at(j, t));
    // Largest scale (lowest frequency) becomes row 0.
    const std::size_t row = n_rows - 1 - j;
    for (std::size_t m = 0; m < n_frames; ++m) {
      const std::size_t a = m * p.hop_length;
      out[row * n_frames + m] = std::max(0.0, prefix[a + p.frame_length] - prefix[a]);
    }
  }
  return TimeFrequencyMatrix(std::move(out), n_frames, cwt_bin_frequencies(p), p.hop_length,
                             p.sample_rate, Representation::kCwt);
}

}  // namespace cqfb
