#pragma once

#include <cstddef>
#include <vector>

#include "cqfb/cqt.hpp"
#include "cqfb/mel.hpp"
#include "cqfb/signal.hpp"

namespace cqfb {

/// Inclusive frame range [first, last].
struct FrameRange {
  std::size_t first = 0;
  std::size_t last = 0;
};

/// Row with the largest mean value over `frames` among rows whose frequency
/// lies in the half-octave band [f / sqrt 2, f sqrt 2). Throws when the band
/// holds no row.
std::size_t band_peak_bin(const TimeFrequencyMatrix& m, double target_hz, FrameRange frames);
/// Same search over rows with lo_hz <= frequency < hi_hz.
std::size_t band_peak_bin(const TimeFrequencyMatrix& m, double lo_hz, double hi_hz,
                          FrameRange frames);

/// Peak of harmonic h of f0 (h = 1 is f0 itself), searched only among rows
/// closer to h f0 than to the neighbouring harmonics: [(h - 1/2) f0, (h + 1/2) f0).
std::size_t harmonic_peak_bin(const TimeFrequencyMatrix& m, double f0_hz, std::size_t h,
                              FrameRange frames);

/// Frames of a centred-frame CQT whose longest atom stays inside samples
/// [begin, end).
FrameRange cqt_interior_frames(const CqtParams& p, std::size_t begin, std::size_t end);
/// Frames of a start-aligned STFT/MFSC that lie inside samples [begin, end).
FrameRange stft_interior_frames(const MelParams& p, std::size_t begin, std::size_t end);

struct HarmonicSpacingConfig {
  std::vector<double> f0_hz = {100.0, 250.0, 500.0, 700.0};
  std::size_t n_harmonics = 6;
  double segment_s = 0.5;
  CqtParams cqt;
  MelParams mel;
};

struct PeakPair {
  std::size_t f0_bin = 0;
  std::size_t octave_bin = 0;  ///< peak near 2 f0
  std::ptrdiff_t spacing() const noexcept {
    return static_cast<std::ptrdiff_t>(octave_bin) - static_cast<std::ptrdiff_t>(f0_bin);
  }
};

/// One row per fundamental. STFT bins are FFT bin indices; CQT and MFSC bins
/// are zero-based row indices.
struct HarmonicSpacingRow {
  double f0_hz = 0.0;
  PeakPair cqt;
  PeakPair stft;
  PeakPair mfsc;
};

/// Concatenates one harmonic stack per f0 (segment_s each), runs CQT (direct),
/// STFT magnitude and MFSC over the whole signal and locates the f0 and 2 f0
/// peaks (harmonic_peak_bin) within each segment's interior frames.
std::vector<HarmonicSpacingRow> harmonic_spacing_experiment(const HarmonicSpacingConfig& config);

struct DeformationConfig {
  double epsilon = 0.02;
  std::vector<double> tones_hz = {250.0, 1000.0, 4500.0};
  double duration_s = 0.5;
  CqtParams cqt;
  MelParams mel;
};

struct PeakShift {
  std::size_t original_bin = 0;
  std::size_t warped_bin = 0;
  std::ptrdiff_t displacement() const noexcept {
    return static_cast<std::ptrdiff_t>(original_bin) - static_cast<std::ptrdiff_t>(warped_bin);
  }
};

struct DeformationRow {
  double tone_hz = 0.0;
  PeakShift stft;
  PeakShift cqt;
};

/// x = sum of the tones (each 1/n amplitude), x' = time_warp(x, epsilon); reports
/// the per-tone peak bin of the time-averaged STFT and CQT for both.
/// Requires 0 <= epsilon < 0.1.
std::vector<DeformationRow> deformation_experiment(const DeformationConfig& config);

}  // namespace cqfb
