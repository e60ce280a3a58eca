#pragma once

#include <cstddef>
#include <vector>

namespace cqfb {

/// Symmetric Hann window, w[n] = 0.5 (1 - cos(2 pi n / (L - 1))).
/// A length-1 window is {1.0}. Throws std::invalid_argument for length 0.
std::vector<double> hann_window(std::size_t length);

/// The same symmetric Hann curve evaluated at a real position u in [0, L-1];
/// zero outside that interval.
double hann_at(double u, std::size_t length) noexcept;

}  // namespace cqfb
