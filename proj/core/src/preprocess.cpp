#include "cqfb/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cqfb/error.hpp"
#include "cqfb/resample.hpp"

namespace cqfb {

void VadParams::validate() const {
  if (frame_length == 0 || hop_length == 0 || frame_length < hop_length) {
    throw std::invalid_argument("VadParams: need frame_length >= hop_length >= 1");
  }
  if (!(threshold_db < 0.0)) throw std::invalid_argument("VadParams: threshold_db must be < 0");
}

Signal resample_to_16k(const Signal& s) {
  constexpr int kTarget = 16000;
  switch (s.sample_rate()) {
    case 16000: return s;
    case 32000:
    case 48000: return decimate(s, s.sample_rate() / kTarget, EdgeMode::kReflect);
    default: throw UnsupportedRateError(s.sample_rate());
  }
}

Signal energy_vad(const Signal& s, const VadParams& p) {
  p.validate();
  if (s.size() < p.frame_length) {
    throw std::invalid_argument("energy_vad: signal shorter than one frame");
  }
  const auto x = s.samples();
  std::vector<std::size_t> starts;
  for (std::size_t a = 0; a < x.size(); a += p.hop_length) {
    starts.push_back(a);
    if (a + p.frame_length >= x.size()) break;
  }
  std::vector<double> rms(starts.size());
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const std::size_t end = std::min(x.size(), starts[i] + p.frame_length);
    double acc = 0.0;
    for (std::size_t t = starts[i]; t < end; ++t) acc += x[t] * x[t];
    rms[i] = std::sqrt(acc / static_cast<double>(end - starts[i]));
  }
  const double loudest = *std::max_element(rms.begin(), rms.end());
  if (loudest <= 0.0) throw EmptySignalError("energy_vad: signal is silent");
  const double floor = loudest * std::pow(10.0, p.threshold_db / 20.0);

  std::vector<char> keep(x.size(), 0);
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (rms[i] < floor) continue;
    const std::size_t end = std::min(x.size(), starts[i] + p.frame_length);
    std::fill(keep.begin() + static_cast<std::ptrdiff_t>(starts[i]),
              keep.begin() + static_cast<std::ptrdiff_t>(end), 1);
  }
  std::vector<double> y;
  y.reserve(x.size());
  for (std::size_t t = 0; t < x.size(); ++t) {
    if (keep[t]) y.push_back(x[t]);
  }
  if (y.empty()) throw EmptySignalError("energy_vad: every frame fell below the threshold");
  return Signal(std::move(y), s.sample_rate());
}

TimeFrequencyMatrix cmvn(const TimeFrequencyMatrix& m) {
  const std::size_t frames = m.n_frames();
  if (frames < 2) throw std::invalid_argument("cmvn: need at least two frames");
  std::vector<double> out(m.values().begin(), m.values().end());
  for (std::size_t b = 0; b < m.n_bins(); ++b) {
    const auto row = m.row(b);
    double mean = 0.0;
    for (double v : row) mean += v;
    mean /= static_cast<double>(frames);
    double var = 0.0;
    for (double v : row) var += (v - mean) * (v - mean);
    var /= static_cast<double>(frames);
    const double sd = std::sqrt(var);
    const double scale = sd < 1e-12 ? 1.0 : 1.0 / sd;
    for (std::size_t t = 0; t < frames; ++t) {
      out[b * frames + t] = (row[t] - mean) * scale;
    }
  }
  auto flags = m.flags();
  flags.normalized = true;
  return TimeFrequencyMatrix(std::move(out), frames,
                             {m.bin_frequencies().begin(), m.bin_frequencies().end()},
                             m.hop_length(), m.sample_rate(), m.representation(), flags);
}

}  // namespace cqfb
