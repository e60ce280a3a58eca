#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cqfb/signal.hpp"

namespace cqfb {

/// How a zero-phase FIR sees samples beyond the signal ends.
enum class EdgeMode {
  kReflect,  ///< mirror about the end samples (x[-1] = x[1])
  kZero,     ///< samples outside the signal are zero
};

/// Length of the half-band filter used by downsample2.
inline constexpr std::size_t kHalfbandTaps = 127;

/// Blackman-windowed sinc low-pass with `taps` (odd) coefficients and cutoff
/// `cutoff` in cycles per sample (0 < cutoff < 0.5), normalized to unit DC gain.
std::vector<double> design_lowpass(std::size_t taps, double cutoff);

/// Zero-phase (centered) FIR filtering; output has the input's length.
std::vector<double> filter_zero_phase(std::span<const double> x, std::span<const double> taps,
                                      EdgeMode edge);

/// Sample-vector form of downsample2, usable when the rate is not tracked.
std::vector<double> downsample2_samples(std::span<const double> x, EdgeMode edge);

/// Halves the sample rate: 127-tap low-pass at fs/4, then every second sample
/// starting at index 0. Output length is ceil(n / 2). Requires n >= 2.
Signal downsample2(const Signal& s, EdgeMode edge = EdgeMode::kReflect);

/// Integer-factor decimation: low-pass at fs / (2 factor) with 64 * factor - 1
/// taps, then every factor-th sample. factor == 1 returns the input unchanged.
Signal decimate(const Signal& s, int factor, EdgeMode edge = EdgeMode::kReflect);

}  // namespace cqfb
