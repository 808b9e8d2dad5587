#include "dsw/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fft.hpp"

namespace dsw {

SpectralEstimate periodogram(std::span<const double> series) {
  const std::size_t n = series.size();
  if (n < 4) throw std::invalid_argument("periodogram: series too short (n < 4)");
  for (double v : series)
    if (!std::isfinite(v))
      throw std::invalid_argument("periodogram: non-finite value");

  const auto spec = detail::fft_real_forward(series);
  const std::size_t half = n / 2;
  SpectralEstimate out;
  out.n = n;
  out.ordinates.resize(half);
  out.frequencies.resize(half);
  const double norm = 1.0 / (2.0 * std::numbers::pi * static_cast<double>(n));
  for (std::size_t j = 1; j <= half; ++j) {
    out.ordinates[j - 1] = std::norm(spec[j]) * norm;
    out.frequencies[j - 1] =
        2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
  }
  return out;
}

}  // namespace dsw
