#include "cqfb/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cqfb/synth.hpp"

namespace cqfb {

std::size_t band_peak_bin(const TimeFrequencyMatrix& m, double target_hz, FrameRange frames) {
  return band_peak_bin(m, target_hz / std::sqrt(2.0), target_hz * std::sqrt(2.0), frames);
}

std::size_t harmonic_peak_bin(const TimeFrequencyMatrix& m, double f0_hz, std::size_t h,
                              FrameRange frames) {
  if (h == 0 || !(f0_hz > 0.0)) throw std::invalid_argument("harmonic_peak_bin: need h >= 1, f0 > 0");
  const double c = static_cast<double>(h);
  return band_peak_bin(m, (c - 0.5) * f0_hz, (c + 0.5) * f0_hz, frames);
}

std::size_t band_peak_bin(const TimeFrequencyMatrix& m, double lo, double hi, FrameRange frames) {
  if (frames.last < frames.first || frames.last >= m.n_frames()) {
    throw std::invalid_argument("band_peak_bin: frame range outside the matrix");
  }
  const auto freqs = m.bin_frequencies();
  bool found = false;
  std::size_t best = 0;
  double best_value = 0.0;
  for (std::size_t b = 0; b < m.n_bins(); ++b) {
    if (freqs[b] < lo || freqs[b] >= hi) continue;
    const auto row = m.row(b);
    double acc = 0.0;
    for (std::size_t t = frames.first; t <= frames.last; ++t) acc += row[t];
    const double mean = acc / static_cast<double>(frames.last - frames.first + 1);
    if (!found || mean > best_value) {
      best = b;
      best_value = mean;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("band_peak_bin: no row inside the search band");
  return best;
}

FrameRange cqt_interior_frames(const CqtParams& p, std::size_t begin, std::size_t end) {
  const std::size_t reach = atom_length(0, p) / 2 + 1;
  if (end < begin + 2 * reach) throw std::invalid_argument("cqt_interior_frames: segment too short");
  const std::size_t lo = begin + reach;
  const std::size_t hi = end - reach;
  FrameRange r{(lo + p.hop_length - 1) / p.hop_length, hi / p.hop_length};
  if (r.last < r.first) throw std::invalid_argument("cqt_interior_frames: no interior frame");
  return r;
}

FrameRange stft_interior_frames(const MelParams& p, std::size_t begin, std::size_t end) {
  if (end < begin + p.win_length) throw std::invalid_argument("stft_interior_frames: segment too short");
  FrameRange r{(begin + p.hop_length - 1) / p.hop_length, (end - p.win_length) / p.hop_length};
  if (r.last < r.first) throw std::invalid_argument("stft_interior_frames: no interior frame");
  return r;
}

std::vector<HarmonicSpacingRow> harmonic_spacing_experiment(const HarmonicSpacingConfig& config) {
  const int fs = config.cqt.sample_rate;
  if (config.mel.sample_rate != fs) throw std::invalid_argument("harmonic_spacing: rate mismatch");
  std::vector<Signal> parts;
  for (double f0 : config.f0_hz) {
    parts.push_back(synth_harmonic_stack(f0, config.n_harmonics, config.segment_s, fs));
  }
  const Signal x = concatenate(parts);
  const auto cq = cqt(x, config.cqt, CqtMode::kDirect);
  const auto spec = stft_magnitude(x, config.mel);
  const auto mel = mfsc(x, config.mel);

  std::vector<HarmonicSpacingRow> rows;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::size_t end = begin + parts[i].size();
    const double f0 = config.f0_hz[i];
    const auto cq_frames = cqt_interior_frames(config.cqt, begin, end);
    const auto st_frames = stft_interior_frames(config.mel, begin, end);
    HarmonicSpacingRow row;
    row.f0_hz = f0;
    row.cqt = {harmonic_peak_bin(cq, f0, 1, cq_frames), harmonic_peak_bin(cq, f0, 2, cq_frames)};
    row.stft = {harmonic_peak_bin(spec, f0, 1, st_frames), harmonic_peak_bin(spec, f0, 2, st_frames)};
    row.mfsc = {harmonic_peak_bin(mel, f0, 1, st_frames), harmonic_peak_bin(mel, f0, 2, st_frames)};
    rows.push_back(row);
    begin = end;
  }
  return rows;
}

std::vector<DeformationRow> deformation_experiment(const DeformationConfig& config) {
  if (!(config.epsilon >= 0.0 && config.epsilon < 0.1)) {
    throw std::invalid_argument("deformation_experiment: epsilon must lie in [0, 0.1)");
  }
  if (config.tones_hz.empty()) throw std::invalid_argument("deformation_experiment: no tones");
  const int fs = config.cqt.sample_rate;
  if (config.mel.sample_rate != fs) throw std::invalid_argument("deformation_experiment: rate mismatch");
  const double amp = 1.0 / static_cast<double>(config.tones_hz.size());
  Signal x = synth_tone(config.tones_hz.front(), config.duration_s, fs, amp);
  for (std::size_t i = 1; i < config.tones_hz.size(); ++i) {
    x = mix(x, synth_tone(config.tones_hz[i], config.duration_s, fs, amp));
  }
  const Signal warped = time_warp(x, config.epsilon);

  const auto cq_x = cqt(x, config.cqt, CqtMode::kDirect);
  const auto cq_w = cqt(warped, config.cqt, CqtMode::kDirect);
  const auto st_x = stft_magnitude(x, config.mel);
  const auto st_w = stft_magnitude(warped, config.mel);
  const auto cq_fx = cqt_interior_frames(config.cqt, 0, x.size());
  const auto cq_fw = cqt_interior_frames(config.cqt, 0, warped.size());
  const auto st_fx = stft_interior_frames(config.mel, 0, x.size());
  const auto st_fw = stft_interior_frames(config.mel, 0, warped.size());

  std::vector<DeformationRow> rows;
  for (double tone : config.tones_hz) {
    DeformationRow row;
    row.tone_hz = tone;
    row.stft = {band_peak_bin(st_x, tone, st_fx), band_peak_bin(st_w, tone, st_fw)};
    row.cqt = {band_peak_bin(cq_x, tone, cq_fx), band_peak_bin(cq_w, tone, cq_fw)};
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cqfb
