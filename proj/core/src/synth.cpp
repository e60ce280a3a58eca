#include "cqfb/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <stdexcept>

namespace cqfb {
namespace {

std::size_t sample_count(double duration_s, int sample_rate) {
  if (!(duration_s >= 0.0)) throw std::invalid_argument("duration must be non-negative");
  if (sample_rate <= 0) throw std::invalid_argument("sample_rate must be positive");
  return static_cast<std::size_t>(std::llround(duration_s * sample_rate));
}

}  // namespace

Signal synth_tone(double freq_hz, double duration_s, int sample_rate, double amplitude) {
  if (sample_rate <= 0) throw std::invalid_argument("synth_tone: sample_rate must be positive");
  if (!(freq_hz > 0.0) || !(freq_hz < sample_rate / 2.0)) {
    throw std::invalid_argument("synth_tone: frequency must lie in (0, fs/2)");
  }
  const std::size_t n = sample_count(duration_s, sample_rate);
  std::vector<double> x(n);
  const double w = 2.0 * std::numbers::pi * freq_hz / sample_rate;
  for (std::size_t i = 0; i < n; ++i) x[i] = amplitude * std::sin(w * static_cast<double>(i));
  return Signal(std::move(x), sample_rate);
}

Signal synth_harmonic_stack(double f0_hz, std::size_t n_harmonics, double duration_s,
                            int sample_rate) {
  if (sample_rate <= 0) throw std::invalid_argument("synth_harmonic_stack: bad sample_rate");
  const double top = f0_hz * static_cast<double>(n_harmonics + 1);
  if (!(f0_hz > 0.0) || !(top < sample_rate / 2.0)) {
    throw std::invalid_argument("synth_harmonic_stack: highest harmonic at or above Nyquist");
  }
  const std::size_t n = sample_count(duration_s, sample_rate);
  std::vector<double> x(n, 0.0);
  for (std::size_t h = 1; h <= n_harmonics + 1; ++h) {
    const double w = 2.0 * std::numbers::pi * f0_hz * static_cast<double>(h) / sample_rate;
    for (std::size_t i = 0; i < n; ++i) x[i] += std::sin(w * static_cast<double>(i));
  }
  double peak = 0.0;
  for (double v : x) peak = std::max(peak, std::abs(v));
  if (peak > 0.0) {
    for (double& v : x) v *= 0.9 / peak;
  }
  return Signal(std::move(x), sample_rate);
}

Signal synth_noise(double duration_s, int sample_rate, std::uint64_t seed, double amplitude) {
  const std::size_t n = sample_count(duration_s, sample_rate);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-amplitude, amplitude);
  std::vector<double> x(n);
  for (double& v : x) v = dist(rng);
  return Signal(std::move(x), sample_rate);
}

Signal time_shift(const Signal& s, std::ptrdiff_t shift) {
  const auto n = static_cast<std::ptrdiff_t>(s.size());
  if (std::abs(shift) >= n && !(n == 0 && shift == 0)) {
    throw std::invalid_argument("time_shift: |shift| must be smaller than the signal length");
  }
  std::vector<double> y(s.size(), 0.0);
  const auto x = s.samples();
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const std::ptrdiff_t src = i - shift;
    if (src >= 0 && src < n) y[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(src)];
  }
  return Signal(std::move(y), s.sample_rate());
}

Signal time_warp(const Signal& s, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("time_warp: epsilon must lie in [0, 1)");
  }
  if (epsilon == 0.0 || s.empty()) {
    return s;
  }
  const double rate = 1.0 - epsilon;
  const double last = static_cast<double>(s.size() - 1);
  const auto out_len = static_cast<std::size_t>(std::floor(last / rate)) + 1;
  const auto x = s.samples();
  std::vector<double> y(out_len);
  for (std::size_t n = 0; n < out_len; ++n) {
    const double pos = std::min(rate * static_cast<double>(n), last);
    const auto i0 = static_cast<std::size_t>(std::floor(pos));
    const double frac = pos - static_cast<double>(i0);
    const double a = x[i0];
    const double b = (i0 + 1 < x.size()) ? x[i0 + 1] : a;
    y[n] = a + frac * (b - a);
  }
  return Signal(std::move(y), s.sample_rate());
}

Signal mix(const Signal& a, const Signal& b) {
  if (a.sample_rate() != b.sample_rate()) throw std::invalid_argument("mix: rate mismatch");
  std::vector<double> y(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) y[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) y[i] += b[i];
  return Signal(std::move(y), a.sample_rate());
}

Signal concatenate(std::span<const Signal> parts) {
  if (parts.empty()) throw std::invalid_argument("concatenate: no parts");
  std::vector<double> y;
  for (const auto& p : parts) {
    if (p.sample_rate() != parts.front().sample_rate()) {
      throw std::invalid_argument("concatenate: rate mismatch");
    }
    y.insert(y.end(), p.samples().begin(), p.samples().end());
  }
  return Signal(std::move(y), parts.front().sample_rate());
}

}  // namespace cqfb
