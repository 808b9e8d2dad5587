#ifndef DSW_SIM_HPP
#define DSW_SIM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "dsw/time_series.hpp"

namespace dsw {

// Generative description of an ARFIMA(p, d, q) process. AR/MA dynamics are
// applied by filtering an exact fractional-white-noise sample, discarding
// burn_in observations.
struct ArfimaSpec {
  double d = 0.0;              // memory parameter, in [0, 0.5)
  std::vector<double> ar;      // autoregressive coefficients
  std::vector<double> ma;      // moving-average coefficients
  double sigma = 1.0;          // innovation standard deviation
  double mean = 0.0;           // process mean
  std::size_t burn_in = 1000;  // discarded filter transient

  // d in [0, 0.5), sigma > 0, AR polynomial roots outside the unit circle.
  void validate() const;
};

struct BreakSpec {
  enum class Kind { MeanShift, VarianceShift };
  Kind kind = Kind::MeanShift;
  std::size_t at = 1;      // 1-based index of the first shifted observation
  double magnitude = 0.0;  // additive delta (mean) or factor on sigma (variance)
};

// Autocovariances gamma(0..max_lag) of ARFIMA(0,d,0), via the stable ratio
// recursion gamma(k) = gamma(k-1) * (k-1+d)/(k-d).
std::vector<double> acvf_fwn(double d, double sigma, std::size_t max_lag);

// Exact Gaussian sample: circulant embedding of the FWN autocovariance with
// a Durbin-Levinson fallback, AR/MA filtering with burn-in, mean added.
// Deterministic given (spec, length, seed).
TimeSeries gen_arfima(const ArfimaSpec& spec, std::size_t length,
                      std::uint64_t seed);

TimeSeries apply_break(const TimeSeries& series, const BreakSpec& brk);

// Fractional Brownian motion W_d(j/N), j = 0..N, as normalized partial sums
// of exact FWN increments; Var[W_d(1)] = 1 by construction.
std::vector<double> gen_fbm_path(double d, std::size_t grid_points,
                                 std::uint64_t seed);

namespace detail {

// Zero-mean stationary Gaussian sample with the given autocovariances
// (acvf[0..n]). Returns empty when the circulant embedding has a negative
// eigenvalue beyond roundoff.
std::vector<double> circulant_sample(const std::vector<double>& acvf,
                                     std::size_t n, std::mt19937_64& rng);

// O(n^2) Hosking recursion; always applicable.
std::vector<double> durbin_levinson_sample(const std::vector<double>& acvf,
                                           std::size_t n, std::mt19937_64& rng);

}  // namespace detail

}  // namespace dsw

#endif
