#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cqfb/signal.hpp"

namespace cqfb {

/// Constant-Q transform configuration. Defaults: 24 bins at 3 bins per octave
/// from C1 (32.70 Hz), hop 64 at 16 kHz.
struct CqtParams {
  double f_min = 32.70;
  std::size_t bins_per_octave = 3;
  std::size_t n_bins = 24;
  std::size_t hop_length = 64;
  int sample_rate = 16000;
  double sparsity_threshold = 0.0054;

  /// Throws std::invalid_argument when the highest bin reaches Nyquist or a
  /// field is out of range.
  void validate() const;
  std::size_t n_octaves() const noexcept {
    return (n_bins + bins_per_octave - 1) / bins_per_octave;
  }
};

enum class CqtMode { kDirect, kFast };

/// Q = 1 / (2^(1/B) - 1).
double q_factor(std::size_t bins_per_octave);

/// f_k = f_min 2^(k/B) for k = 0 .. n_bins-1 (zero-based).
std::vector<double> bin_frequencies(const CqtParams& p);

/// N_k = round(Q fs / f_k), rounding halves upward.
std::size_t atom_length(std::size_t bin, const CqtParams& p);
std::vector<std::size_t> atom_lengths(const CqtParams& p);

/// a_k(n) = (1/N_k) w(n) exp(-2 pi i n f_k / fs), n = 0 .. N_k-1, w the
/// symmetric Hann window of length N_k. `bin` is zero-based.
ComplexVector cqt_atom(std::size_t bin, const CqtParams& p);

/// Nonzero entries of one bin's spectral kernel. Values are conj(A[f]) / L so
/// the coefficient of a frame is the plain dot product with the frame's DFT.
struct SparseSpectrum {
  std::vector<std::uint32_t> indices;
  ComplexVector values;
};

/// Frequency-domain kernels for one octave of bins, evaluated on the signal
/// decimated by `decimation`.
struct CqtKernel {
  std::size_t first_bin = 0;   ///< zero-based index of the lowest bin covered
  std::size_t decimation = 1;  ///< sample-rate divisor this kernel runs at
  std::size_t fft_length = 0;  ///< power of two
  double q_factor = 0.0;
  std::vector<std::size_t> atom_lengths;  ///< N_k in full-rate samples, ascending bin order
  std::vector<SparseSpectrum> spectra;    ///< ascending bin order

  std::size_t n_bins() const noexcept { return spectra.size(); }
  std::size_t stored_coefficients() const noexcept;
  std::size_t dense_coefficients() const noexcept { return fft_length * spectra.size(); }
};

/// Kernel for the top octave (the highest B bins) at the full sample rate.
CqtKernel build_kernel(const CqtParams& p);

/// One kernel per octave, highest first. The top two octaves run at the full
/// rate; octave o >= 1 runs at fs / 2^(o-1), so each decimated octave keeps one
/// octave of spectral headroom below its Nyquist frequency.
std::vector<CqtKernel> build_kernel_bank(const CqtParams& p);

/// Hop divisor the fast path needs: the decimation of the lowest octave.
std::size_t fast_hop_divisor(const CqtParams& p);

struct CqtReport {
  CqtMode mode_used = CqtMode::kDirect;
  std::string warning;  ///< non-empty when fast mode fell back to direct
};

/// |X[k, m]| for frames centred on n = m * hop, m = 0 .. len/hop, with zeros
/// outside the signal. Direct mode evaluates the atom inner products in the
/// time domain; fast mode uses the sparse kernel bank and octave recursion, and
/// falls back to direct evaluation (reported through `report`) when the hop is
/// not a multiple of fast_hop_divisor().
TimeFrequencyMatrix cqt(const Signal& s, const CqtParams& p, CqtMode mode = CqtMode::kDirect,
                        CqtReport* report = nullptr);

}  // namespace cqfb
