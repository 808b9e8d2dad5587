#include "dsw/memory_est.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dsw/common.hpp"

namespace dsw {

namespace {

constexpr double kDMin = -0.5;
constexpr double kDMax = 0.5;
constexpr int kGridPoints = 201;
constexpr double kTolerance = 1e-6;

struct Objective {
  std::vector<double> ords;  // I_j / mean(I), j = 1..w
  std::vector<double> logj;
  double mean_logj = 0.0;

  double operator()(double d) const {
    double s = 0.0;
    for (std::size_t j = 0; j < ords.size(); ++j)
      s += std::exp(2.0 * d * logj[j]) * ords[j];
    return std::log(s / static_cast<double>(ords.size())) - 2.0 * d * mean_logj;
  }
};

}  // namespace

std::size_t default_lw_bandwidth(std::size_t n, double exponent) {
  const auto w = static_cast<std::size_t>(
      std::floor(std::pow(static_cast<double>(n), exponent)));
  return std::min(w, n / 2);
}

namespace detail {

MemoryEstimate local_whittle_from_spec(const SpectralEstimate& spec,
                                       std::size_t bandwidth) {
  const std::size_t w = bandwidth;
  if (w < 2 || w > spec.ordinates.size())
    throw std::invalid_argument("local_whittle: bandwidth out of range");

  Objective obj;
  obj.ords.assign(spec.ordinates.begin(),
                  spec.ordinates.begin() + static_cast<long>(w));
  double total = 0.0;
  for (double v : obj.ords) total += v;
  if (!(total > 0.0))
    throw numeric_error("local_whittle: degenerate (constant) series");
  // Normalizing by the mean ordinate makes the criterion exactly invariant
  // under rescaling of the input and keeps the sums well-conditioned.
  for (double& v : obj.ords) v /= (total / static_cast<double>(w));
  obj.logj.resize(w);
  for (std::size_t j = 1; j <= w; ++j) {
    obj.logj[j - 1] = std::log(static_cast<double>(j));
    obj.mean_logj += obj.logj[j - 1];
  }
  obj.mean_logj /= static_cast<double>(w);

  // Grid scan; consecutive grid values share the per-j factor j^{2*step}.
  const double step = (kDMax - kDMin) / (kGridPoints - 1);
  std::vector<double> terms(w), factors(w);
  for (std::size_t j = 0; j < w; ++j) {
    terms[j] = std::exp(2.0 * kDMin * obj.logj[j]) * obj.ords[j];
    factors[j] = std::exp(2.0 * step * obj.logj[j]);
  }
  int best_idx = 0;
  double best_val = 0.0;
  for (int i = 0; i < kGridPoints; ++i) {
    const double d = kDMin + step * i;
    double s = 0.0;
    for (std::size_t j = 0; j < w; ++j) s += terms[j];
    const double r = std::log(s / static_cast<double>(w)) - 2.0 * d * obj.mean_logj;
    if (i == 0 || r < best_val) {
      best_val = r;
      best_idx = i;
    }
    if (i + 1 < kGridPoints)
      for (std::size_t j = 0; j < w; ++j) terms[j] *= factors[j];
  }

  // Golden-section refinement in the bracketing grid cell.
  double a = std::max(kDMin, kDMin + step * (best_idx - 1));
  double b = std::min(kDMax, kDMin + step * (best_idx + 1));
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - gr * (b - a);
  double x2 = a + gr * (b - a);
  double f1 = obj(x1), f2 = obj(x2);
  while (b - a > kTolerance) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = obj(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = obj(x2);
    }
  }
  const double d_hat = 0.5 * (a + b);

  MemoryEstimate out;
  out.d_hat = d_hat;
  out.bandwidth = w;
  out.objective_value = obj(d_hat);
  out.at_boundary = (d_hat - kDMin < 2.0 * kTolerance) ||
                    (kDMax - d_hat < 2.0 * kTolerance);
  return out;
}

}  // namespace detail

MemoryEstimate local_whittle(std::span<const double> series,
                             std::size_t bandwidth) {
  const std::size_t n = series.size();
  if (n < 16) throw std::invalid_argument("local_whittle: series too short (n < 16)");
  const std::size_t w = bandwidth == 0 ? default_lw_bandwidth(n) : bandwidth;
  if (w < 2 || w > n / 2)
    throw std::invalid_argument("local_whittle: bandwidth out of range");
  return detail::local_whittle_from_spec(periodogram(series), w);
}

}  // namespace dsw
