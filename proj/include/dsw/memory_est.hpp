#ifndef DSW_MEMORY_EST_HPP
#define DSW_MEMORY_EST_HPP

#include <span>
#include <vector>

#include "dsw/spectral.hpp"
#include "dsw/time_series.hpp"

namespace dsw {

struct MemoryEstimate {
  double d_hat = 0.0;
  std::size_t bandwidth = 0;
  double objective_value = 0.0;
  bool at_boundary = false;  // minimizer pinned at -0.5 or 0.5
};

// floor(n^exponent), capped at floor(n/2).
std::size_t default_lw_bandwidth(std::size_t n, double exponent = 0.65);

// Local Whittle estimator of the memory parameter: global minimizer of
//   R(d) = log(w^-1 sum_j j^{2d} I_n(lambda_j)) - (2d/w) sum_j log j
// over [-0.5, 0.5], located by a 201-point grid scan plus golden-section
// refinement to 1e-6 on d. bandwidth = 0 selects the default.
MemoryEstimate local_whittle(std::span<const double> series,
                             std::size_t bandwidth = 0);

inline MemoryEstimate local_whittle(const TimeSeries& series,
                                    std::size_t bandwidth = 0) {
  return local_whittle(std::span<const double>(series.values), bandwidth);
}

namespace detail {
// Same estimator on an already computed periodogram; the DSW per-m loop
// shares one transform between the memory and variance estimators.
MemoryEstimate local_whittle_from_spec(const SpectralEstimate& spec,
                                       std::size_t bandwidth);
}  // namespace detail

}  // namespace dsw

#endif
