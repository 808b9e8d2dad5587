#ifndef DSW_FFT_HPP
#define DSW_FFT_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace dsw::detail {

// Forward DFT, X_k = sum_t x_t e^{-2*pi*i*k*t/N}. Backed by FFTW with a
// per-size plan cache; safe to call from many threads.
void fft_forward(std::span<const std::complex<double>> in,
                 std::span<std::complex<double>> out);

std::vector<std::complex<double>> fft_real_forward(std::span<const double> x);

// Biased (1/n) autocovariances of the demeaned series, lags 0..max_lag,
// computed by zero-padded FFT convolution.
std::vector<double> autocovariances(std::span<const double> x,
                                    std::size_t max_lag);

}  // namespace dsw::detail

#endif
