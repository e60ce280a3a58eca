#pragma once

#include <cstddef>
#include <cstdint>

#include "cqfb/signal.hpp"

namespace cqfb {

/// amplitude * sin(2 pi freq n / fs), round(duration * fs) samples.
/// Requires 0 < freq < fs / 2.
Signal synth_tone(double freq_hz, double duration_s, int sample_rate, double amplitude = 1.0);

/// Equal-amplitude sinusoids at f0, 2 f0, ..., (n_harmonics + 1) f0, scaled so
/// the peak absolute sample is 0.9. The highest component must be below Nyquist.
Signal synth_harmonic_stack(double f0_hz, std::size_t n_harmonics, double duration_s,
                            int sample_rate);

/// Uniform white noise in [-amplitude, amplitude] from a seeded generator.
Signal synth_noise(double duration_s, int sample_rate, std::uint64_t seed,
                   double amplitude = 1.0);

/// Moves samples right by `shift` (left when negative); vacated positions are
/// zero and the length is unchanged. Requires |shift| < length.
Signal time_shift(const Signal& s, std::ptrdiff_t shift);

/// x'[n] = x((1 - epsilon) n) by linear interpolation, for 0 <= epsilon < 1.
/// The output stops at the last position that does not read past the input.
Signal time_warp(const Signal& s, double epsilon);

/// Sum of two equal-rate signals, truncated or zero-extended to the longer one.
Signal mix(const Signal& a, const Signal& b);

/// Concatenation of equal-rate signals.
Signal concatenate(std::span<const Signal> parts);

}  // namespace cqfb
