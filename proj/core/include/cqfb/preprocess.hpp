#pragma once

#include <cstddef>

#include "cqfb/signal.hpp"

namespace cqfb {

/// Frame-energy speech activity detector settings, in samples at the signal's
/// rate. Defaults are 25 ms frames with a 10 ms hop at 16 kHz and a -40 dB
/// threshold relative to the loudest frame.
struct VadParams {
  std::size_t frame_length = 400;
  std::size_t hop_length = 160;
  double threshold_db = -40.0;

  void validate() const;
};

/// Brings 16, 32 or 48 kHz audio to 16 kHz by integer decimation.
/// Throws UnsupportedRateError for any other rate.
Signal resample_to_16k(const Signal& s);

/// Keeps every sample covered by at least one frame whose RMS reaches the
/// threshold; kept samples are returned in their original order. A trailing
/// partial frame is judged on the samples it has. Throws EmptySignalError when
/// nothing survives.
Signal energy_vad(const Signal& s, const VadParams& p);

/// Per-row standardization across frames (population variance). Rows whose
/// standard deviation is below 1e-12 are only mean-shifted. The result is
/// flagged as normalized. Requires at least two frames.
TimeFrequencyMatrix cmvn(const TimeFrequencyMatrix& m);

}  // namespace cqfb
