#include "dsw/lrv.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dsw/common.hpp"
#include "dsw/spectral.hpp"
#include "fft.hpp"

namespace dsw {

std::string to_string(LrvMethod m) {
  return m == LrvMethod::Mac ? "mac" : "hac";
}

LrvMethod lrv_method_from_string(const std::string& s) {
  if (s == "mac" || s == "MAC") return LrvMethod::Mac;
  if (s == "hac" || s == "HAC") return LrvMethod::Hac;
  throw std::invalid_argument("unknown long-run variance method: " + s);
}

double p_factor(double d) {
  if (!(d > -0.5 && d < 0.5))
    throw std::invalid_argument("p_factor: d outside (-0.5, 0.5)");
  if (d == 0.0) return 2.0 * std::numbers::pi;
  return 2.0 * std::tgamma(1.0 - 2.0 * d) * std::sin(std::numbers::pi * d) /
         (d * (1.0 + 2.0 * d));
}

std::size_t default_mac_bandwidth(std::size_t n, double exponent) {
  const auto w = static_cast<std::size_t>(
      std::floor(std::pow(static_cast<double>(n), exponent)));
  return std::min(w, n / 2);
}

namespace detail {

LrvEstimate mac_from_spec(const SpectralEstimate& spec, double d,
                          std::size_t bandwidth) {
  const std::size_t w = bandwidth;
  if (w < 1 || w > spec.ordinates.size())
    throw std::invalid_argument("mac_variance: bandwidth out of range");

  LrvEstimate out;
  out.method = LrvMethod::Mac;
  out.bandwidth = w;
  out.d_used = std::clamp(d, -0.49, 0.49);
  out.d_clamped = out.d_used != d;

  double b = 0.0;
  for (std::size_t j = 0; j < w; ++j)
    b += std::pow(spec.frequencies[j], 2.0 * out.d_used) * spec.ordinates[j];
  b /= static_cast<double>(w);
  out.value = p_factor(out.d_used) * b;
  if (!(out.value > 0.0))
    throw numeric_error("mac_variance: degenerate (constant) series");
  return out;
}

}  // namespace detail

LrvEstimate mac_variance(std::span<const double> series, double d,
                         std::size_t bandwidth) {
  const std::size_t n = series.size();
  if (n < 16) throw std::invalid_argument("mac_variance: series too short (n < 16)");
  const std::size_t w = bandwidth == 0 ? default_mac_bandwidth(n) : bandwidth;
  if (w < 1 || w > n / 2)
    throw std::invalid_argument("mac_variance: bandwidth out of range");
  return detail::mac_from_spec(periodogram(series), d, w);
}

LrvEstimate hac_variance(std::span<const double> series) {
  const std::size_t n = series.size();
  if (n < 16) throw std::invalid_argument("hac_variance: series too short (n < 16)");

  const auto gamma = detail::autocovariances(series, n - 1);
  if (!(gamma[0] > 0.0))
    throw numeric_error("hac_variance: degenerate (constant) series");

  // Andrews AR(1) plug-in bandwidth for the quadratic-spectral kernel.
  double rho = gamma[1] / gamma[0];
  rho = std::clamp(rho, -0.97, 0.97);
  const double one_minus = 1.0 - rho;
  const double alpha2 = 4.0 * rho * rho / (one_minus * one_minus * one_minus * one_minus);
  const double st =
      1.3221 * std::pow(alpha2 * static_cast<double>(n), 0.2);

  double v = gamma[0];
  if (st > 1e-12) {
    for (std::size_t k = 1; k < n; ++k) {
      const double x = static_cast<double>(k) / st;
      const double z = 6.0 * std::numbers::pi * x / 5.0;
      const double kern =
          25.0 / (12.0 * std::numbers::pi * std::numbers::pi * x * x) *
          (std::sin(z) / z - std::cos(z));
      v += 2.0 * kern * gamma[k];
    }
  }
  if (!(v > 0.0)) throw numeric_error("hac_variance: non-positive estimate");

  LrvEstimate out;
  out.method = LrvMethod::Hac;
  out.value = v;
  out.bandwidth = static_cast<std::size_t>(std::lround(std::max(st, 0.0)));
  return out;
}

}  // namespace dsw
