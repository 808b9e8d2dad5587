#ifndef DSW_DSW_TEST_HPP
#define DSW_DSW_TEST_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsw/forecast.hpp"
#include "dsw/lrv.hpp"
#include "dsw/sim.hpp"
#include "dsw/time_series.hpp"

namespace dsw {

// Tuning parameters of the double sup-Wald test. tau lives in
// forecast.horizon. Explicit m0/m1 (e.g. from date bounds) override the
// fractional defaults.
struct DswConfig {
  double m0_frac = 0.2;    // smallest in-sample fraction of T
  double mu_bar = 0.3;     // in-sample window as a fraction of n0
  double epsilon = 0.1;    // trimming
  std::size_t m_stride = 1;
  double mac_bandwidth_exp = 0.8;
  double lw_bandwidth_exp = 0.65;
  ForecastSpec forecast;
  LrvMethod variance = LrvMethod::Mac;  // MAC test or HAC baseline
  std::optional<std::size_t> m0;
  std::optional<std::size_t> m1;

  std::size_t tau() const { return forecast.horizon; }
  void validate() const;
  // Stable serialization for hashing and cache keys.
  std::string canonical() const;
};

struct DswBounds {
  std::size_t m0 = 0;
  std::size_t m1 = 0;
  std::size_t n0 = 0;
};

// Resolves and checks the in-sample grid for a series of length T.
DswBounds resolve_bounds(const DswConfig& config, std::size_t T);

struct SupWaldResult {
  double statistic = 0.0;
  // 1-based last index of the first segment at the SW argmax.
  std::size_t break_index = 0;
};

// SW = max over trimmed break candidates of [SSR - SSR(T_b)] / lrv, with the
// restricted and two-segment demeaned sums computed from prefix sums of L
// and L^2 (one O(n) scan).
SupWaldResult sup_wald(std::span<const double> losses, double epsilon,
                       double lrv);

struct DswPerM {
  std::size_t m = 0;
  double sw = 0.0;
  std::size_t t_b_global = 0;  // CUSUM breakpoint, global 1-based index
  double d_hat = 0.0;
  double lrv = 0.0;
};

struct DswResult {
  double statistic = 0.0;
  std::size_t m_star = 0;
  std::size_t break_index = 0;  // T_b(m_star), global 1-based index
  std::optional<Date> break_date;
  double d_hat_loss = 0.0;
  double lrv = 0.0;
  std::vector<DswPerM> per_m_trace;
};

// For each m in {m0, m0+stride, ..., m1}: build out-of-sample losses, locate
// T_b (CUSUM argmax; least-squares argmin under the HAC baseline), demean
// the two segments, estimate d by local Whittle and the long-run variance on
// the demeaned losses, then run the SW scan with that variance held fixed.
// DSW is the maximum over m.
DswResult dsw_test(const TimeSeries& series, const DswConfig& config);

struct QuantileTable {
  std::vector<double> probs;
  std::vector<double> values;
  std::size_t reps = 0;
};

// Empirical quantiles of the DSW statistic over reps independently seeded
// null paths from the generator.
QuantileTable simulate_critical_values(const ArfimaSpec& generator,
                                       const DswConfig& config, std::size_t T,
                                       std::size_t reps,
                                       std::span<const double> probs,
                                       std::uint64_t seed, unsigned threads = 0);

// Quantiles of the limit functional
//   sup_{mu in [0, mu_bar]} sup_{lambda} [(lambda-mu)W(1) + (1-lambda)W(mu)
//     - (1-mu)W(lambda)]^2 / ((1-lambda)(1-mu)(lambda-mu))
// over simulated fractional Brownian motion paths. Finite-sample statistics
// carry a T^{d} scale factor relative to this limit; at d = 0 the two agree
// directly.
QuantileTable limit_distribution_quantiles(double d, double mu_bar,
                                           double epsilon, std::size_t grid,
                                           std::size_t reps,
                                           std::span<const double> probs,
                                           std::uint64_t seed,
                                           unsigned threads = 0);

namespace detail {
// Sup of the limit functional on one path (grid+1 points on [0,1]).
double dsw_limit_sup(std::span<const double> path, double mu_bar,
                     double epsilon);
}  // namespace detail

}  // namespace dsw

#endif
