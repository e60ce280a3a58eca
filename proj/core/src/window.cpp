#include "cqfb/window.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cqfb {

std::vector<double> hann_window(std::size_t length) {
  if (length == 0) throw std::invalid_argument("hann_window: length must be >= 1");
  if (length == 1) return {1.0};
  std::vector<double> w(length);
  const double denom = static_cast<double>(length - 1);
  for (std::size_t n = 0; n < length; ++n) {
    w[n] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(n) / denom));
  }
  return w;
}

double hann_at(double u, std::size_t length) noexcept {
  if (length <= 1) return (length == 1 && u == 0.0) ? 1.0 : 0.0;
  const double last = static_cast<double>(length - 1);
  if (u < 0.0 || u > last) return 0.0;
  return 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * u / last));
}

}  // namespace cqfb
