#ifndef DSW_SPECTRAL_HPP
#define DSW_SPECTRAL_HPP

#include <span>
#include <vector>

#include "dsw/time_series.hpp"

namespace dsw {

// Periodogram ordinates I_n(lambda_j) at the Fourier frequencies
// lambda_j = 2*pi*j/n, j = 1..floor(n/2). Ordinates are per radian:
// I_n(lambda_j) = |sum_t e^{i t lambda_j} x_t|^2 / (2*pi*n).
struct SpectralEstimate {
  std::vector<double> ordinates;
  std::vector<double> frequencies;
  std::size_t n = 0;
};

// Computed on the raw (not demeaned) input; callers demean when their
// context requires it. O(n log n).
SpectralEstimate periodogram(std::span<const double> series);

inline SpectralEstimate periodogram(const TimeSeries& series) {
  return periodogram(std::span<const double>(series.values));
}

}  // namespace dsw

#endif
