#include "cqfb/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace cqfb {
namespace {

// FFTW's planner is not re-entrant; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

struct FftPlan::Impl {
  std::size_t size = 0;
  fftw_complex* in = nullptr;
  fftw_complex* out = nullptr;
  fftw_plan plan = nullptr;

  Impl(std::size_t n, FftDirection direction) : size(n) {
    std::lock_guard lock(planner_mutex());
    in = fftw_alloc_complex(n);
    out = fftw_alloc_complex(n);
    if (in == nullptr || out == nullptr) throw std::bad_alloc();
    plan = fftw_plan_dft_1d(static_cast<int>(n), in, out,
                            direction == FftDirection::kForward ? FFTW_FORWARD : FFTW_BACKWARD,
                            FFTW_ESTIMATE);
    if (plan == nullptr) throw std::runtime_error("fftw: planning failed");
  }

  ~Impl() {
    std::lock_guard lock(planner_mutex());
    if (plan != nullptr) fftw_destroy_plan(plan);
    fftw_free(in);
    fftw_free(out);
  }
};

FftPlan::FftPlan(std::size_t size, FftDirection direction) {
  if (size == 0) throw std::invalid_argument("FftPlan: size must be >= 1");
  impl_ = std::make_unique<Impl>(size, direction);
}

FftPlan::~FftPlan() = default;
FftPlan::FftPlan(FftPlan&&) noexcept = default;
FftPlan& FftPlan::operator=(FftPlan&&) noexcept = default;

std::size_t FftPlan::size() const noexcept { return impl_->size; }

void FftPlan::execute(std::span<const Complex> input, std::span<Complex> output) {
  const std::size_t n = impl_->size;
  if (input.size() != n || output.size() != n) {
    throw std::invalid_argument("FftPlan::execute: size mismatch");
  }
  // std::complex<double> is layout-compatible with fftw_complex.
  std::copy(input.begin(), input.end(), reinterpret_cast<Complex*>(impl_->in));
  fftw_execute(impl_->plan);
  const auto* result = reinterpret_cast<const Complex*>(impl_->out);
  std::copy(result, result + n, output.begin());
}

ComplexVector dft(std::span<const Complex> input) {
  if (input.empty()) throw std::invalid_argument("dft: empty input");
  FftPlan plan(input.size(), FftDirection::kForward);
  ComplexVector out(input.size());
  plan.execute(input, out);
  return out;
}

ComplexVector idft(std::span<const Complex> input) {
  if (input.empty()) throw std::invalid_argument("idft: empty input");
  FftPlan plan(input.size(), FftDirection::kInverse);
  ComplexVector out(input.size());
  plan.execute(input, out);
  const double scale = 1.0 / static_cast<double>(input.size());
  for (auto& v : out) v *= scale;
  return out;
}

std::size_t next_pow2(std::size_t n) noexcept {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace cqfb
