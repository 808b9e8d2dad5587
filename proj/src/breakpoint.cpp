#include "dsw/breakpoint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "dsw/common.hpp"
#include "dsw/sim.hpp"

namespace dsw {

BreakEstimate cusum_break(std::span<const double> series, double d, double lrv,
                          double trim) {
  const std::size_t n = series.size();
  if (n < 20) throw std::invalid_argument("cusum_break: series too short (n < 20)");
  if (!(trim > 0.0 && trim < 0.5))
    throw std::invalid_argument("cusum_break: trim outside (0, 0.5)");
  if (!(lrv > 0.0)) throw std::invalid_argument("cusum_break: lrv must be > 0");
  if (variance_of(series) <= 0.0)
    throw numeric_error("cusum_break: constant series, no break defined");

  double mean = 0.0;
  for (double v : series) mean += v;
  mean /= static_cast<double>(n);

  const auto lo = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(trim * static_cast<double>(n))));
  const auto hi = std::min<std::size_t>(
      n - 1,
      static_cast<std::size_t>(std::floor((1.0 - trim) * static_cast<double>(n))));
  if (lo > hi) throw std::invalid_argument("cusum_break: empty candidate range");

  double s = 0.0, best = -1.0;
  std::size_t best_t = lo;
  for (std::size_t t = 1; t <= hi; ++t) {
    s += series[t - 1] - mean;
    if (t < lo) continue;
    const double a = std::fabs(s);
    if (a > best) {
      best = a;
      best_t = t;
    }
  }

  BreakEstimate out;
  out.index = best_t;
  out.d_used = d;
  out.statistic =
      best / (std::pow(static_cast<double>(n), 0.5 + d) * std::sqrt(lrv));
  return out;
}

double fbb_sup_quantile(double d, double prob, std::size_t reps,
                        std::size_t grid, std::uint64_t seed, double trim) {
  if (!(prob > 0.0 && prob < 1.0))
    throw std::invalid_argument("fbb_sup_quantile: prob outside (0, 1)");
  if (reps < 100) throw std::invalid_argument("fbb_sup_quantile: reps < 100");
  if (grid < 2) throw std::invalid_argument("fbb_sup_quantile: grid < 2");
  if (!(trim >= 0.0 && trim < 0.5))
    throw std::invalid_argument("fbb_sup_quantile: trim outside [0, 0.5)");

  const auto nd = static_cast<double>(grid);
  const auto lo = static_cast<std::size_t>(std::ceil(trim * nd));
  const auto hi = static_cast<std::size_t>(std::floor((1.0 - trim) * nd));
  std::vector<double> sups(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    const auto w = gen_fbm_path(d, grid, derive_seed(seed, r));
    const double w1 = w[grid];
    double sup = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) {
      const double bridge = w[j] - (static_cast<double>(j) / nd) * w1;
      sup = std::max(sup, std::fabs(bridge));
    }
    sups[r] = sup;
  }
  return quantile(std::move(sups), prob);
}

}  // namespace dsw
