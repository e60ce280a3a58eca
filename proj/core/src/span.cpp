#include "cqfb/span.hpp"

#include <cmath>
#include <stdexcept>

#include "cqfb/fft.hpp"
#include "cqfb/window.hpp"

namespace cqfb {

double filter_span(std::span<const double> energy, int sample_rate, const SpanOptions& options) {
  if (energy.empty()) throw std::invalid_argument("filter_span: empty filter");
  if (sample_rate <= 0) throw std::invalid_argument("filter_span: bad sample rate");
  std::size_t lo = 0;
  std::size_t hi = 0;
  if (options.measure == SpanMeasure::kSupport) {
    bool found = false;
    for (std::size_t i = 0; i < energy.size(); ++i) {
      if (energy[i] > 0.0) {
        if (!found) lo = i;
        hi = i;
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("filter_span: filter has no energy");
  } else {
    if (!(options.energy_fraction > 0.0 && options.energy_fraction <= 1.0)) {
      throw std::invalid_argument("filter_span: energy_fraction must lie in (0, 1]");
    }
    double total = 0.0;
    for (double e : energy) total += e;
    if (!(total > 0.0)) throw std::invalid_argument("filter_span: filter has no energy");
    const double tail = 0.5 * (1.0 - options.energy_fraction) * total;
    double cum = 0.0;
    bool have_lo = false;
    for (std::size_t i = 0; i < energy.size(); ++i) {
      cum += energy[i];
      if (!have_lo && cum > tail) {
        lo = i;
        have_lo = true;
      }
      if (cum >= total - tail) {
        hi = i;
        break;
      }
    }
  }
  return static_cast<double>(hi - lo + 1) / sample_rate;
}

InvarianceProfile temporal_span_profile(const CqtParams& p, const SpanOptions& options) {
  InvarianceProfile out;
  out.kind = Representation::kCqt;
  out.center_hz = bin_frequencies(p);
  for (std::size_t k = 0; k < p.n_bins; ++k) {
    const auto atom = cqt_atom(k, p);
    std::vector<double> e(atom.size());
    for (std::size_t i = 0; i < atom.size(); ++i) e[i] = std::norm(atom[i]);
    out.span_s.push_back(filter_span(e, p.sample_rate, options));
  }
  return out;
}

InvarianceProfile temporal_span_profile(const CwtParams& p, const SpanOptions& options) {
  p.validate();
  InvarianceProfile out;
  out.kind = Representation::kCwt;
  out.center_hz = cwt_bin_frequencies(p);
  for (auto it = p.scales.rbegin(); it != p.scales.rend(); ++it) {
    const auto psi = morlet_wavelet(*it, p);
    std::vector<double> e(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) e[i] = std::norm(psi[i]);
    out.span_s.push_back(filter_span(e, p.sample_rate, options));
  }
  return out;
}

std::vector<double> mel_filter_impulse_response(const MelParams& p, std::size_t filter) {
  const auto fb = mel_filterbank(p);
  if (filter >= fb.n_filters) throw std::invalid_argument("mel filter index out of range");
  const std::size_t n = p.n_fft;
  ComplexVector spectrum(n);
  for (std::size_t k = 0; k < fb.n_bins; ++k) {
    spectrum[k] = fb.at(filter, k);
    if (k > 0 && k < n - k) spectrum[n - k] = fb.at(filter, k);
  }
  const auto h = idft(spectrum);
  // Zero-phase response is centred on sample 0; the window is centred there too.
  const auto window = hann_window(p.win_length);
  const auto half = static_cast<std::ptrdiff_t>(p.win_length / 2);
  std::vector<double> out(p.win_length);
  for (std::size_t i = 0; i < p.win_length; ++i) {
    const std::ptrdiff_t lag = static_cast<std::ptrdiff_t>(i) - half;
    const auto idx = static_cast<std::size_t>((lag % static_cast<std::ptrdiff_t>(n) +
                                               static_cast<std::ptrdiff_t>(n)) %
                                              static_cast<std::ptrdiff_t>(n));
    out[i] = h[idx].real() * window[i];
  }
  return out;
}

InvarianceProfile temporal_span_profile(const MelParams& p, const SpanOptions& options) {
  const auto fb = mel_filterbank(p);
  InvarianceProfile out;
  out.kind = Representation::kMfsc;
  out.center_hz = fb.centers_hz;
  for (std::size_t m = 0; m < fb.n_filters; ++m) {
    const auto h = mel_filter_impulse_response(p, m);
    std::vector<double> e(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) e[i] = h[i] * h[i];
    out.span_s.push_back(filter_span(e, p.sample_rate, options));
  }
  return out;
}

}  // namespace cqfb
