#pragma once

#include <stdexcept>
#include <string>

namespace cqfb {

// Invalid arguments are reported with std::invalid_argument throughout the
// library. The types below cover the remaining failure classes that callers
// are expected to handle distinctly.

/// Source sample rate cannot be brought to 16 kHz by integer decimation.
class UnsupportedRateError : public std::runtime_error {
 public:
  explicit UnsupportedRateError(int rate)
      : std::runtime_error("unsupported sample rate: " + std::to_string(rate) + " Hz"),
        rate_(rate) {}
  int rate() const noexcept { return rate_; }

 private:
  int rate_;
};

/// Speech activity detection removed every frame.
class EmptySignalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unsupported file contents (WAV, CQFB, CSV, manifests).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cqfb
