#pragma once

#include <cstddef>
#include <memory>
#include <span>

#include "cqfb/signal.hpp"

namespace cqfb {

/// Unnormalized forward DFT, X[k] = sum_n x[n] exp(-2 pi i k n / N), any N >= 1.
ComplexVector dft(std::span<const Complex> input);
/// Inverse of dft (carries the 1/N factor).
ComplexVector idft(std::span<const Complex> input);

/// Smallest power of two >= n (n = 0 gives 1).
std::size_t next_pow2(std::size_t n) noexcept;

enum class FftDirection { kForward, kInverse };

/// Reusable fixed-size transform. Planning is serialized internally, so plans
/// may be created from any thread; a single plan must not be executed from
/// two threads at once. Inverse plans are unnormalized.
class FftPlan {
 public:
  FftPlan(std::size_t size, FftDirection direction);
  ~FftPlan();
  FftPlan(FftPlan&&) noexcept;
  FftPlan& operator=(FftPlan&&) noexcept;
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  std::size_t size() const noexcept;

  /// Transforms `input` (size() values) into `output` (size() values).
  /// The spans may alias.
  void execute(std::span<const Complex> input, std::span<Complex> output);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cqfb
