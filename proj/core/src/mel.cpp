#include "cqfb/mel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cqfb/fft.hpp"
#include "cqfb/window.hpp"

namespace cqfb {

void MelParams::validate() const {
  if (sample_rate <= 0) throw std::invalid_argument("MelParams: sample_rate must be positive");
  if (win_length == 0 || hop_length == 0) {
    throw std::invalid_argument("MelParams: win_length and hop_length must be >= 1");
  }
  if (win_length > n_fft) throw std::invalid_argument("MelParams: win_length exceeds n_fft");
  if (n_filters == 0) throw std::invalid_argument("MelParams: n_filters must be >= 1");
  const double hi = upper_edge();
  if (!(f_low >= 0.0) || !(f_low < hi) || hi > sample_rate / 2.0) {
    throw std::invalid_argument("MelParams: need 0 <= f_low < f_high <= fs/2");
  }
  if (!(log_floor > 0.0)) throw std::invalid_argument("MelParams: log_floor must be positive");
}

double hz_to_mel(double hz) noexcept { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double mel_to_hz(double mel) noexcept { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

StftResult stft(const Signal& s, const MelParams& p) {
  p.validate();
  if (s.sample_rate() != p.sample_rate) {
    throw std::invalid_argument("stft: signal rate does not match MelParams::sample_rate");
  }
  if (s.size() < p.win_length) throw std::invalid_argument("stft: signal shorter than one window");
  const auto window = hann_window(p.win_length);
  StftResult out;
  out.n_bins = p.n_spectrum_bins();
  out.n_frames = 1 + (s.size() - p.win_length) / p.hop_length;
  out.values.resize(out.n_bins * out.n_frames);

  FftPlan plan(p.n_fft, FftDirection::kForward);
  ComplexVector buf(p.n_fft);
  ComplexVector spec(p.n_fft);
  const auto x = s.samples();
  for (std::size_t m = 0; m < out.n_frames; ++m) {
    std::fill(buf.begin(), buf.end(), Complex{});
    const std::size_t start = m * p.hop_length;
    for (std::size_t i = 0; i < p.win_length; ++i) buf[i] = x[start + i] * window[i];
    plan.execute(buf, spec);
    for (std::size_t k = 0; k < out.n_bins; ++k) out.values[k * out.n_frames + m] = spec[k];
  }
  return out;
}

TimeFrequencyMatrix stft_magnitude(const Signal& s, const MelParams& p) {
  const auto spec = stft(s, p);
  const std::size_t rows = spec.n_bins - 1;
  std::vector<double> values(rows * spec.n_frames);
  std::vector<double> freqs(rows);
  const double bin_hz = static_cast<double>(p.sample_rate) / static_cast<double>(p.n_fft);
  for (std::size_t r = 0; r < rows; ++r) {
    freqs[r] = static_cast<double>(r) * bin_hz;
    for (std::size_t m = 0; m < spec.n_frames; ++m) {
      values[r * spec.n_frames + m] = std::abs(spec.at(r, m));
    }
  }
  return TimeFrequencyMatrix(std::move(values), spec.n_frames, std::move(freqs), p.hop_length,
                             p.sample_rate, Representation::kStft);
}

MelFilterbank mel_filterbank(const MelParams& p) {
  p.validate();
  MelFilterbank fb;
  fb.n_filters = p.n_filters;
  fb.n_bins = p.n_spectrum_bins();
  fb.weights.assign(fb.n_filters * fb.n_bins, 0.0);

  const double mel_lo = hz_to_mel(p.f_low);
  const double mel_hi = hz_to_mel(p.upper_edge());
  const std::size_t n_points = p.n_filters + 2;
  for (std::size_t i = 0; i < n_points; ++i) {
    const double mel = mel_lo + (mel_hi - mel_lo) * static_cast<double>(i) /
                                    static_cast<double>(n_points - 1);
    fb.edges_hz.push_back(mel_to_hz(mel));
  }
  const double bin_hz = static_cast<double>(p.sample_rate) / static_cast<double>(p.n_fft);
  for (std::size_t m = 0; m < p.n_filters; ++m) {
    const double lo = fb.edges_hz[m];
    const double mid = fb.edges_hz[m + 1];
    const double hi = fb.edges_hz[m + 2];
    fb.centers_hz.push_back(mid);
    double peak = 0.0;
    for (std::size_t k = 0; k < fb.n_bins; ++k) {
      const double f = static_cast<double>(k) * bin_hz;
      double w = 0.0;
      if (f > lo && f <= mid) {
        w = (f - lo) / (mid - lo);
      } else if (f > mid && f < hi) {
        w = (hi - f) / (hi - mid);
      }
      fb.weights[m * fb.n_bins + k] = w;
      peak = std::max(peak, w);
    }
    if (peak <= 0.0) {
      throw std::invalid_argument("mel_filterbank: filter " + std::to_string(m) +
                                  " is narrower than one FFT bin; reduce n_filters or raise n_fft");
    }
    for (std::size_t k = 0; k < fb.n_bins; ++k) fb.weights[m * fb.n_bins + k] /= peak;
  }
  return fb;
}

TimeFrequencyMatrix mfsc(const Signal& s, const MelParams& p) {
  const auto fb = mel_filterbank(p);
  const auto spec = stft(s, p);
  std::vector<double> power(spec.values.size());
  for (std::size_t i = 0; i < power.size(); ++i) power[i] = std::norm(spec.values[i]);

  std::vector<double> out(fb.n_filters * spec.n_frames, 0.0);
  for (std::size_t f = 0; f < fb.n_filters; ++f) {
    for (std::size_t k = 0; k < fb.n_bins; ++k) {
      const double w = fb.at(f, k);
      if (w == 0.0) continue;
      for (std::size_t m = 0; m < spec.n_frames; ++m) {
        out[f * spec.n_frames + m] += w * power[k * spec.n_frames + m];
      }
    }
  }
  TimeFrequencyMatrix::Flags flags;
  if (p.apply_log) {
    for (double& v : out) v = std::log(v + p.log_floor);
    flags.log_domain = true;
  }
  return TimeFrequencyMatrix(std::move(out), spec.n_frames, fb.centers_hz, p.hop_length,
                             p.sample_rate, Representation::kMfsc, flags);
}

}  // namespace cqfb
