#ifndef DSW_LRV_HPP
#define DSW_LRV_HPP

#include <span>
#include <string>

#include "dsw/spectral.hpp"
#include "dsw/time_series.hpp"

namespace dsw {

enum class LrvMethod { Mac, Hac };

std::string to_string(LrvMethod m);
LrvMethod lrv_method_from_string(const std::string& s);

struct LrvEstimate {
  double value = 0.0;
  double d_used = 0.0;        // memory parameter after clamping (MAC only)
  std::size_t bandwidth = 0;  // frequencies (MAC) or QS lag window (HAC, rounded)
  LrvMethod method = LrvMethod::Mac;
  bool d_clamped = false;
};

// p(d) = 2*Gamma(1-2d)*sin(pi*d) / (d*(1+2d)) for d != 0, 2*pi at d = 0.
double p_factor(double d);

// floor(n^exponent), capped at floor(n/2).
std::size_t default_mac_bandwidth(std::size_t n, double exponent = 0.8);

// Memory-and-autocorrelation-consistent long-run variance:
// p(d) * w^-1 * sum_{j=1..w} lambda_j^{2d} I_n(lambda_j). d is clamped to
// [-0.49, 0.49] before the Gamma factor; bandwidth = 0 selects the default.
LrvEstimate mac_variance(std::span<const double> series, double d,
                         std::size_t bandwidth = 0);

// Quadratic-spectral kernel estimate with the Andrews AR(1)-plug-in
// automatic bandwidth; the short-memory baseline.
LrvEstimate hac_variance(std::span<const double> series);

inline LrvEstimate mac_variance(const TimeSeries& s, double d,
                                std::size_t bandwidth = 0) {
  return mac_variance(std::span<const double>(s.values), d, bandwidth);
}
inline LrvEstimate hac_variance(const TimeSeries& s) {
  return hac_variance(std::span<const double>(s.values));
}

namespace detail {
// MAC on an already computed periodogram (shared with local Whittle in the
// DSW per-m loop).
LrvEstimate mac_from_spec(const SpectralEstimate& spec, double d,
                          std::size_t bandwidth);
}  // namespace detail

}  // namespace dsw

#endif
