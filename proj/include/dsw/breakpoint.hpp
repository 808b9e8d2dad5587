#ifndef DSW_BREAKPOINT_HPP
#define DSW_BREAKPOINT_HPP

#include <cstdint>
#include <span>

#include "dsw/time_series.hpp"

namespace dsw {

struct BreakEstimate {
  // 1-based index of the last observation of the first segment; the first
  // argmax of |S_t| within the trimmed range.
  std::size_t index = 0;
  // max |S_t| / (n^{1/2+d} * sqrt(lrv)) over the trimmed range.
  double statistic = 0.0;
  double d_used = 0.0;
};

// Long-memory robust CUSUM break location, S_t = sum_{i<=t}(x_i - xbar).
// The normalization affects only the statistic, never the location.
BreakEstimate cusum_break(std::span<const double> series, double d, double lrv,
                          double trim = 0.1);

inline BreakEstimate cusum_break(const TimeSeries& s, double d, double lrv,
                                 double trim = 0.1) {
  return cusum_break(std::span<const double>(s.values), d, lrv, trim);
}

// Empirical prob-quantile of sup_{r in [trim, 1-trim]} |W_d(r) - r W_d(1)|
// over simulated fractional Brownian motion paths.
double fbb_sup_quantile(double d, double prob, std::size_t reps,
                        std::size_t grid, std::uint64_t seed,
                        double trim = 0.0);

}  // namespace dsw

#endif
