#include "cqfb/resample.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cqfb {
namespace {

// Mirror index into [0, n) without repeating the edge sample.
std::ptrdiff_t reflect_index(std::ptrdiff_t i, std::ptrdiff_t n) {
  if (n == 1) return 0;
  const std::ptrdiff_t period = 2 * (n - 1);
  i %= period;
  if (i < 0) i += period;
  return i < n ? i : period - i;
}

}  // namespace

std::vector<double> design_lowpass(std::size_t taps, double cutoff) {
  if (taps == 0 || taps % 2 == 0) throw std::invalid_argument("design_lowpass: taps must be odd");
  if (!(cutoff > 0.0 && cutoff < 0.5)) {
    throw std::invalid_argument("design_lowpass: cutoff must lie in (0, 0.5)");
  }
  std::vector<double> h(taps);
  const double mid = static_cast<double>(taps - 1) / 2.0;
  const double span = static_cast<double>(taps - 1);
  // Evaluate one half and mirror so the taps are exactly symmetric.
  for (std::size_t i = 0; i <= taps / 2; ++i) {
    const double t = static_cast<double>(i) - mid;
    const double arg = 2.0 * cutoff * t;
    const double sinc = (t == 0.0) ? 1.0 : std::sin(std::numbers::pi * arg) / (std::numbers::pi * arg);
    const double phase = 2.0 * std::numbers::pi * static_cast<double>(i) / span;
    const double blackman = taps == 1 ? 1.0 : 0.42 - 0.5 * std::cos(phase) + 0.08 * std::cos(2.0 * phase);
    h[i] = 2.0 * cutoff * sinc * blackman;
    h[taps - 1 - i] = h[i];
  }
  double sum = 0.0;
  for (double v : h) sum += v;
  for (double& v : h) v /= sum;
  return h;
}

std::vector<double> filter_zero_phase(std::span<const double> x, std::span<const double> taps,
                                      EdgeMode edge) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  const auto half = static_cast<std::ptrdiff_t>(taps.size() / 2);
  std::vector<double> y(x.size(), 0.0);
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double acc = 0.0;
    const bool interior = i - half >= 0 && i + half < n;
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(taps.size()); ++j) {
      std::ptrdiff_t k = i + j - half;
      if (!interior) {
        if (edge == EdgeMode::kZero) {
          if (k < 0 || k >= n) continue;
        } else {
          k = reflect_index(k, n);
        }
      }
      acc += taps[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(k)];
    }
    y[static_cast<std::size_t>(i)] = acc;
  }
  return y;
}

std::vector<double> downsample2_samples(std::span<const double> x, EdgeMode edge) {
  if (x.size() < 2) throw std::invalid_argument("downsample2: need at least 2 samples");
  static const std::vector<double> taps = design_lowpass(kHalfbandTaps, 0.25);
  const auto filtered = filter_zero_phase(x, taps, edge);
  std::vector<double> y((filtered.size() + 1) / 2);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = filtered[2 * i];
  return y;
}

Signal downsample2(const Signal& s, EdgeMode edge) {
  if (s.sample_rate() % 2 != 0) throw std::invalid_argument("downsample2: odd sample rate");
  return Signal(downsample2_samples(s.samples(), edge), s.sample_rate() / 2);
}

Signal decimate(const Signal& s, int factor, EdgeMode edge) {
  if (factor < 1) throw std::invalid_argument("decimate: factor must be >= 1");
  if (factor == 1) return s;
  if (s.sample_rate() % factor != 0) {
    throw std::invalid_argument("decimate: rate not divisible by factor");
  }
  if (s.empty()) return Signal({}, s.sample_rate() / factor);
  const auto taps = design_lowpass(64 * static_cast<std::size_t>(factor) - 1, 0.5 / factor);
  const auto filtered = filter_zero_phase(s.samples(), taps, edge);
  const auto f = static_cast<std::size_t>(factor);
  std::vector<double> y((filtered.size() + f - 1) / f);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = filtered[f * i];
  return Signal(std::move(y), s.sample_rate() / factor);
}

}  // namespace cqfb
