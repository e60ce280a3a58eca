#pragma once

#include <span>
#include <vector>

#include "cqfb/cqt.hpp"
#include "cqfb/cwt.hpp"
#include "cqfb/mel.hpp"
#include "cqfb/signal.hpp"

namespace cqfb {

enum class SpanMeasure {
  kSupport,  ///< first to last sample with nonzero energy
  kEnergy,   ///< central interval holding `energy_fraction` of the energy
};

struct SpanOptions {
  SpanMeasure measure = SpanMeasure::kSupport;
  double energy_fraction = 0.99;
};

/// Per-bin time spread of a front-end's filters, ascending in frequency.
struct InvarianceProfile {
  Representation kind = Representation::kCqt;
  std::vector<double> center_hz;
  std::vector<double> span_s;
};

/// Duration in seconds of a filter given its per-sample energy |h[n]|^2.
double filter_span(std::span<const double> energy, int sample_rate, const SpanOptions& options);

/// CQT atoms.
InvarianceProfile temporal_span_profile(const CqtParams& p, const SpanOptions& options = {});
/// Morlet wavelets, one per scale.
InvarianceProfile temporal_span_profile(const CwtParams& p, const SpanOptions& options = {});
/// Mel filters: zero-phase impulse response of each triangle, multiplied by
/// the Hann analysis window and limited to win_length samples.
InvarianceProfile temporal_span_profile(const MelParams& p, const SpanOptions& options = {});

/// Impulse response of mel filter `filter` after windowing, win_length samples.
std::vector<double> mel_filter_impulse_response(const MelParams& p, std::size_t filter);

}  // namespace cqfb
