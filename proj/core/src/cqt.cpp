#include "cqfb/cqt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cqfb/fft.hpp"
#include "cqfb/resample.hpp"
#include "cqfb/window.hpp"

namespace cqfb {
namespace {

std::ptrdiff_t floor_div(std::ptrdiff_t a, std::ptrdiff_t b) {
  std::ptrdiff_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::ptrdiff_t ceil_div(std::ptrdiff_t a, std::ptrdiff_t b) { return -floor_div(-a, b); }

// Atom of `bin` sampled on the grid of a signal decimated by `decimation`,
// indexed by offset from the frame centre. The factor `decimation` makes the
// decimated inner product approximate the full-rate sum.
struct GridAtom {
  std::ptrdiff_t first_offset = 0;
  ComplexVector values;
};

GridAtom grid_atom(std::size_t bin, std::size_t decimation, const CqtParams& p, double freq) {
  const std::size_t n = atom_length(bin, p);
  const auto half = static_cast<std::ptrdiff_t>(n / 2);
  const auto d = static_cast<std::ptrdiff_t>(decimation);
  const std::ptrdiff_t lo = ceil_div(-half, d);
  const std::ptrdiff_t hi = floor_div(static_cast<std::ptrdiff_t>(n) - 1 - half, d);
  GridAtom atom;
  atom.first_offset = lo;
  atom.values.reserve(static_cast<std::size_t>(hi - lo + 1));
  const double scale = static_cast<double>(decimation) / static_cast<double>(n);
  const double w = 2.0 * std::numbers::pi * freq / p.sample_rate;
  for (std::ptrdiff_t i = lo; i <= hi; ++i) {
    const double u = static_cast<double>(i * d + half);
    atom.values.push_back(scale * hann_at(u, n) * std::polar(1.0, -w * u));
  }
  return atom;
}

CqtKernel make_kernel(const CqtParams& p, std::size_t first_bin, std::size_t last_bin,
                      std::size_t decimation) {
  const auto freqs = bin_frequencies(p);
  CqtKernel kernel;
  kernel.first_bin = first_bin;
  kernel.decimation = decimation;
  kernel.q_factor = q_factor(p.bins_per_octave);

  std::vector<GridAtom> atoms;
  std::size_t reach = 1;
  for (std::size_t k = first_bin; k < last_bin; ++k) {
    atoms.push_back(grid_atom(k, decimation, p, freqs[k]));
    kernel.atom_lengths.push_back(atom_length(k, p));
    const auto& a = atoms.back();
    const auto last = a.first_offset + static_cast<std::ptrdiff_t>(a.values.size()) - 1;
    reach = std::max({reach, static_cast<std::size_t>(-a.first_offset),
                      static_cast<std::size_t>(last + 1)});
  }
  kernel.fft_length = next_pow2(2 * reach);
  const std::size_t len = kernel.fft_length;

  FftPlan plan(len, FftDirection::kForward);
  ComplexVector buf(len);
  ComplexVector spec(len);
  for (const auto& a : atoms) {
    std::fill(buf.begin(), buf.end(), Complex{});
    for (std::size_t j = 0; j < a.values.size(); ++j) {
      const std::ptrdiff_t off = a.first_offset + static_cast<std::ptrdiff_t>(j);
      const auto idx = static_cast<std::size_t>((off % static_cast<std::ptrdiff_t>(len) +
                                                 static_cast<std::ptrdiff_t>(len)) %
                                                static_cast<std::ptrdiff_t>(len));
      buf[idx] = a.values[j];
    }
    plan.execute(buf, spec);
    double peak = 0.0;
    for (const auto& v : spec) peak = std::max(peak, std::abs(v));
    const double floor = p.sparsity_threshold * peak;
    SparseSpectrum sparse;
    for (std::size_t f = 0; f < len; ++f) {
      if (std::abs(spec[f]) >= floor) {
        sparse.indices.push_back(static_cast<std::uint32_t>(f));
        sparse.values.push_back(std::conj(spec[f]) / static_cast<double>(len));
      }
    }
    kernel.spectra.push_back(std::move(sparse));
  }
  return kernel;
}

std::size_t frame_count(std::size_t length, std::size_t hop) { return 1 + length / hop; }

TimeFrequencyMatrix assemble(std::vector<double> values, std::size_t n_frames,
                             const CqtParams& p) {
  return TimeFrequencyMatrix(std::move(values), n_frames, bin_frequencies(p), p.hop_length,
                             p.sample_rate, Representation::kCqt);
}

TimeFrequencyMatrix cqt_direct(const Signal& s, const CqtParams& p) {
  const auto x = s.samples();
  const auto len = static_cast<std::ptrdiff_t>(x.size());
  const std::size_t n_frames = frame_count(x.size(), p.hop_length);
  std::vector<double> out(p.n_bins * n_frames, 0.0);
  for (std::size_t k = 0; k < p.n_bins; ++k) {
    const auto atom = cqt_atom(k, p);
    const auto half = static_cast<std::ptrdiff_t>(atom.size() / 2);
    for (std::size_t m = 0; m < n_frames; ++m) {
      const auto start = static_cast<std::ptrdiff_t>(m * p.hop_length) - half;
      const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, -start);
      const std::ptrdiff_t hi =
          std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(atom.size()), len - start);
      Complex acc{};
      for (std::ptrdiff_t n = lo; n < hi; ++n) {
        acc += x[static_cast<std::size_t>(start + n)] * std::conj(atom[static_cast<std::size_t>(n)]);
      }
      out[k * n_frames + m] = std::abs(acc);
    }
  }
  return assemble(std::move(out), n_frames, p);
}

void apply_kernel(const CqtKernel& kernel, std::span<const double> y, std::size_t n_frames,
                  std::size_t hop, std::vector<double>& out) {
  const std::size_t len = kernel.fft_length;
  const auto half = static_cast<std::ptrdiff_t>(len / 2);
  const auto ylen = static_cast<std::ptrdiff_t>(y.size());
  const auto step = static_cast<std::ptrdiff_t>(hop / kernel.decimation);
  FftPlan plan(len, FftDirection::kForward);
  ComplexVector buf(len);
  ComplexVector spec(len);
  for (std::size_t m = 0; m < n_frames; ++m) {
    const std::ptrdiff_t centre = static_cast<std::ptrdiff_t>(m) * step;
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(len); ++j) {
      const std::ptrdiff_t pos = centre + (j < half ? j : j - static_cast<std::ptrdiff_t>(len));
      buf[static_cast<std::size_t>(j)] =
          (pos >= 0 && pos < ylen) ? Complex(y[static_cast<std::size_t>(pos)], 0.0) : Complex{};
    }
    plan.execute(buf, spec);
    for (std::size_t b = 0; b < kernel.n_bins(); ++b) {
      const auto& sparse = kernel.spectra[b];
      Complex acc{};
      for (std::size_t e = 0; e < sparse.indices.size(); ++e) {
        acc += spec[sparse.indices[e]] * sparse.values[e];
      }
      out[(kernel.first_bin + b) * n_frames + m] = std::abs(acc);
    }
  }
}

TimeFrequencyMatrix cqt_fast(const Signal& s, const CqtParams& p) {
  const std::size_t n_frames = frame_count(s.size(), p.hop_length);
  std::vector<double> out(p.n_bins * n_frames, 0.0);
  std::vector<double> y(s.samples().begin(), s.samples().end());
  std::size_t current = 1;
  for (const auto& kernel : build_kernel_bank(p)) {
    while (current < kernel.decimation) {
      y = downsample2_samples(y, EdgeMode::kZero);
      current *= 2;
    }
    apply_kernel(kernel, y, n_frames, p.hop_length, out);
  }
  return assemble(std::move(out), n_frames, p);
}

}  // namespace

void CqtParams::validate() const {
  if (sample_rate <= 0) throw std::invalid_argument("CqtParams: sample_rate must be positive");
  if (bins_per_octave == 0) throw std::invalid_argument("CqtParams: bins_per_octave must be >= 1");
  if (n_bins == 0) throw std::invalid_argument("CqtParams: n_bins must be >= 1");
  if (hop_length == 0) throw std::invalid_argument("CqtParams: hop_length must be >= 1");
  if (!(f_min > 0.0)) throw std::invalid_argument("CqtParams: f_min must be positive");
  if (!(sparsity_threshold >= 0.0 && sparsity_threshold < 1.0)) {
    throw std::invalid_argument("CqtParams: sparsity_threshold must lie in [0, 1)");
  }
  const double top = f_min * std::pow(2.0, static_cast<double>(n_bins - 1) / bins_per_octave);
  if (!(top < sample_rate / 2.0)) {
    throw std::invalid_argument("CqtParams: highest bin at or above Nyquist");
  }
}

double q_factor(std::size_t bins_per_octave) {
  if (bins_per_octave == 0) throw std::invalid_argument("q_factor: bins_per_octave must be >= 1");
  return 1.0 / (std::pow(2.0, 1.0 / static_cast<double>(bins_per_octave)) - 1.0);
}

std::vector<double> bin_frequencies(const CqtParams& p) {
  p.validate();
  std::vector<double> f(p.n_bins);
  for (std::size_t k = 0; k < p.n_bins; ++k) {
    f[k] = p.f_min * std::pow(2.0, static_cast<double>(k) / static_cast<double>(p.bins_per_octave));
  }
  return f;
}

std::size_t atom_length(std::size_t bin, const CqtParams& p) {
  p.validate();
  if (bin >= p.n_bins) throw std::invalid_argument("atom_length: bin out of range");
  const double f = p.f_min * std::pow(2.0, static_cast<double>(bin) / p.bins_per_octave);
  const double exact = q_factor(p.bins_per_octave) * p.sample_rate / f;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(exact + 0.5)));
}

std::vector<std::size_t> atom_lengths(const CqtParams& p) {
  std::vector<std::size_t> n(p.n_bins);
  for (std::size_t k = 0; k < p.n_bins; ++k) n[k] = atom_length(k, p);
  return n;
}

ComplexVector cqt_atom(std::size_t bin, const CqtParams& p) {
  if (bin >= p.n_bins) throw std::invalid_argument("cqt_atom: bin out of range");
  const std::size_t n = atom_length(bin, p);
  const double f = bin_frequencies(p)[bin];
  const auto w = hann_window(n);
  const double step = 2.0 * std::numbers::pi * f / p.sample_rate;
  ComplexVector a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = (w[i] / static_cast<double>(n)) * std::polar(1.0, -step * static_cast<double>(i));
  }
  return a;
}

std::size_t CqtKernel::stored_coefficients() const noexcept {
  std::size_t total = 0;
  for (const auto& s : spectra) total += s.indices.size();
  return total;
}

CqtKernel build_kernel(const CqtParams& p) {
  p.validate();
  const std::size_t first = p.n_bins > p.bins_per_octave ? p.n_bins - p.bins_per_octave : 0;
  return make_kernel(p, first, p.n_bins, 1);
}

std::vector<CqtKernel> build_kernel_bank(const CqtParams& p) {
  p.validate();
  std::vector<CqtKernel> bank;
  const std::size_t b = p.bins_per_octave;
  for (std::size_t o = 0; o < p.n_octaves(); ++o) {
    const std::size_t last = p.n_bins - o * b;
    const std::size_t first = last > b ? last - b : 0;
    const std::size_t decimation = o == 0 ? 1 : (std::size_t{1} << (o - 1));
    bank.push_back(make_kernel(p, first, last, decimation));
  }
  return bank;
}

std::size_t fast_hop_divisor(const CqtParams& p) {
  const std::size_t octaves = p.n_octaves();
  return octaves >= 2 ? (std::size_t{1} << (octaves - 2)) : 1;
}

TimeFrequencyMatrix cqt(const Signal& s, const CqtParams& p, CqtMode mode, CqtReport* report) {
  p.validate();
  if (s.sample_rate() != p.sample_rate) {
    throw std::invalid_argument("cqt: signal rate does not match CqtParams::sample_rate");
  }
  CqtReport local;
  local.mode_used = mode;
  if (mode == CqtMode::kFast) {
    const std::size_t divisor = fast_hop_divisor(p);
    if (p.hop_length % divisor != 0) {
      local.mode_used = CqtMode::kDirect;
      local.warning = "cqt: hop_length " + std::to_string(p.hop_length) +
                      " is not a multiple of " + std::to_string(divisor) +
                      "; using direct evaluation";
    } else if (s.size() < 2 * divisor) {
      local.mode_used = CqtMode::kDirect;
      local.warning = "cqt: signal too short for octave recursion; using direct evaluation";
    }
  }
  if (report != nullptr) *report = local;
  return local.mode_used == CqtMode::kFast ? cqt_fast(s, p) : cqt_direct(s, p);
}

}  // namespace cqfb
