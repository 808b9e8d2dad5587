#include "dsw/dsw_test.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dsw/breakpoint.hpp"
#include "dsw/common.hpp"
#include "dsw/memory_est.hpp"
#include "dsw/spectral.hpp"

namespace dsw {

void DswConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw std::invalid_argument("DswConfig: epsilon outside (0, 0.5)");
  // mu_bar = 0 degenerates to a single in-sample size (plain sup-Wald).
  if (!(mu_bar >= 0.0 && mu_bar < 1.0))
    throw std::invalid_argument("DswConfig: mu_bar outside [0, 1)");
  if (!(m0_frac > 0.0 && m0_frac < 1.0))
    throw std::invalid_argument("DswConfig: m0_frac outside (0, 1)");
  if (m_stride < 1) throw std::invalid_argument("DswConfig: m_stride < 1");
  if (!(mac_bandwidth_exp > 0.0 && mac_bandwidth_exp < 1.0) ||
      !(lw_bandwidth_exp > 0.0 && lw_bandwidth_exp < 1.0))
    throw std::invalid_argument("DswConfig: bandwidth exponent outside (0, 1)");
  forecast.validate();
}

std::string DswConfig::canonical() const {
  std::ostringstream os;
  os.precision(17);
  os << "m0_frac=" << m0_frac << ";mu_bar=" << mu_bar << ";eps=" << epsilon
     << ";tau=" << tau() << ";stride=" << m_stride
     << ";mac_exp=" << mac_bandwidth_exp << ";lw_exp=" << lw_bandwidth_exp
     << ";model=ar(" << forecast.ar_order << ");scheme="
     << to_string(forecast.scheme) << ";variance=" << to_string(variance);
  if (m0) os << ";m0=" << *m0;
  if (m1) os << ";m1=" << *m1;
  return os.str();
}

DswBounds resolve_bounds(const DswConfig& config, std::size_t T) {
  config.validate();
  const std::size_t tau = config.tau();
  const std::size_t min_m = std::max<std::size_t>(
      2, static_cast<std::size_t>(config.forecast.ar_order) + 2);

  DswBounds b;
  b.m0 = config.m0 ? *config.m0
                   : static_cast<std::size_t>(
                         std::floor(config.m0_frac * static_cast<double>(T)));
  b.m0 = std::max(b.m0, min_m);
  if (b.m0 + tau >= T)
    throw std::invalid_argument("dsw: series too short for the in-sample start");
  b.n0 = T - b.m0 - tau + 1;
  b.m1 = config.m1
             ? *config.m1
             : b.m0 + static_cast<std::size_t>(
                          std::floor(config.mu_bar * static_cast<double>(b.n0)));
  if (b.m1 < b.m0)
    throw std::invalid_argument("dsw: m1 is smaller than m0");
  if (b.m1 + tau >= T)
    throw std::invalid_argument("dsw: m1 leaves no out-of-sample period");
  const std::size_t n1 = T - b.m1 - tau + 1;
  if (n1 < 20)
    throw std::invalid_argument(
        "dsw: largest in-sample period leaves fewer than 20 losses");
  const auto lo = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(config.epsilon * static_cast<double>(n1))));
  const auto hi = std::min<std::size_t>(
      n1 - 1, static_cast<std::size_t>(
                  std::floor((1.0 - config.epsilon) * static_cast<double>(n1))));
  if (lo > hi)
    throw std::invalid_argument("dsw: empty break-candidate range at m1");
  return b;
}

SupWaldResult sup_wald(std::span<const double> losses, double epsilon,
                       double lrv) {
  const std::size_t n = losses.size();
  if (n < 4) throw std::invalid_argument("sup_wald: need at least 4 losses");
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw std::invalid_argument("sup_wald: epsilon outside (0, 0.5)");
  if (!(lrv > 0.0)) throw std::invalid_argument("sup_wald: lrv must be > 0");

  std::vector<double> ps(n + 1, 0.0), qs(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    ps[i + 1] = ps[i] + losses[i];
    qs[i + 1] = qs[i] + losses[i] * losses[i];
  }
  const double total = ps[n];
  const double ssr_restricted = qs[n] - total * total / static_cast<double>(n);
  if (!(ssr_restricted > 0.0))
    throw numeric_error("sup_wald: degenerate losses (zero variance)");

  const auto lo = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(epsilon * static_cast<double>(n))));
  const auto hi = std::min<std::size_t>(
      n - 1, static_cast<std::size_t>(
                 std::floor((1.0 - epsilon) * static_cast<double>(n))));
  if (lo > hi) throw std::invalid_argument("sup_wald: empty candidate range");

  double best = -1.0;
  std::size_t best_b = lo;
  for (std::size_t b = lo; b <= hi; ++b) {
    const double s1 = ps[b], s2 = total - ps[b];
    const double n1 = static_cast<double>(b), n2 = static_cast<double>(n - b);
    const double ssr_b =
        (qs[b] - s1 * s1 / n1) + (qs[n] - qs[b] - s2 * s2 / n2);
    const double diff = ssr_restricted - ssr_b;
    if (diff > best) {
      best = diff;
      best_b = b;
    }
  }
  SupWaldResult out;
  out.statistic = std::max(best, 0.0) / lrv;
  out.break_index = best_b;
  return out;
}

namespace {

struct PerMOutcome {
  double sw;
  std::size_t b_cusum;  // within the loss series
  double d_hat;
  double lrv;
};

PerMOutcome run_one_m(const TimeSeries& series, std::size_t m,
                      const DswConfig& config) {
  const LossSeries loss = oos_losses(series, m, config.forecast);
  const std::size_t n = loss.n;
  if (n < 20) throw std::invalid_argument("fewer than 20 losses");

  // Locate the breakpoint used for demeaning: CUSUM argmax for the MAC test,
  // least-squares argmin for the HAC baseline.
  std::size_t b;
  if (config.variance == LrvMethod::Mac) {
    b = cusum_break(loss.losses, 0.0, 1.0, config.epsilon).index;
  } else {
    b = sup_wald(loss.losses, config.epsilon, 1.0).break_index;
  }

  std::vector<double> demeaned = loss.losses;
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < b; ++i) m1 += demeaned[i];
  for (std::size_t i = b; i < n; ++i) m2 += demeaned[i];
  m1 /= static_cast<double>(b);
  m2 /= static_cast<double>(n - b);
  for (std::size_t i = 0; i < b; ++i) demeaned[i] -= m1;
  for (std::size_t i = b; i < n; ++i) demeaned[i] -= m2;

  PerMOutcome out{};
  if (config.variance == LrvMethod::Mac) {
    const auto spec = periodogram(std::span<const double>(demeaned));
    const auto est = detail::local_whittle_from_spec(
        spec, default_lw_bandwidth(n, config.lw_bandwidth_exp));
    out.d_hat = est.d_hat;
    out.lrv = detail::mac_from_spec(
                  spec, est.d_hat, default_mac_bandwidth(n, config.mac_bandwidth_exp))
                  .value;
  } else {
    out.d_hat = 0.0;
    out.lrv = hac_variance(std::span<const double>(demeaned)).value;
  }
  out.sw = sup_wald(loss.losses, config.epsilon, out.lrv).statistic;
  out.b_cusum = b;
  return out;
}

}  // namespace

DswResult dsw_test(const TimeSeries& series, const DswConfig& config) {
  series.validate();
  const std::size_t T = series.size();
  const DswBounds bounds = resolve_bounds(config, T);
  const std::size_t tau = config.tau();

  DswResult out;
  out.statistic = -1.0;
  for (std::size_t m = bounds.m0; m <= bounds.m1; m += config.m_stride) {
    PerMOutcome r;
    try {
      r = run_one_m(series, m, config);
    } catch (const numeric_error& e) {
      throw numeric_error("dsw_test: m=" + std::to_string(m) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("dsw_test: m=" + std::to_string(m) + ": " +
                                  e.what());
    }
    DswPerM row;
    row.m = m;
    row.sw = r.sw;
    row.t_b_global = m + tau + r.b_cusum - 1;
    row.d_hat = r.d_hat;
    row.lrv = r.lrv;
    out.per_m_trace.push_back(row);
    if (r.sw > out.statistic) {
      out.statistic = r.sw;
      out.m_star = m;
      out.break_index = row.t_b_global;
      out.d_hat_loss = r.d_hat;
      out.lrv = r.lrv;
    }
  }
  if (series.has_dates()) out.break_date = series.dates[out.break_index - 1];
  return out;
}

QuantileTable simulate_critical_values(const ArfimaSpec& generator,
                                       const DswConfig& config, std::size_t T,
                                       std::size_t reps,
                                       std::span<const double> probs,
                                       std::uint64_t seed, unsigned threads) {
  if (reps < 100)
    throw std::invalid_argument("simulate_critical_values: reps < 100");
  generator.validate();
  resolve_bounds(config, T);

  std::vector<double> stats(reps);
  parallel_for(reps, threads, [&](std::size_t r) {
    const TimeSeries path = gen_arfima(generator, T, derive_seed(seed, r));
    stats[r] = dsw_test(path, config).statistic;
  });
  std::sort(stats.begin(), stats.end());

  QuantileTable table;
  table.reps = reps;
  table.probs.assign(probs.begin(), probs.end());
  table.values.reserve(probs.size());
  for (double p : probs) table.values.push_back(quantile_sorted(stats, p));
  return table;
}

namespace detail {

double dsw_limit_sup(std::span<const double> path, double mu_bar,
                     double epsilon) {
  const std::size_t grid = path.size() - 1;
  const double nd = static_cast<double>(grid);
  const double w1 = path[grid];
  const auto a_max = static_cast<std::size_t>(std::floor(mu_bar * nd));
  double sup = 0.0;
  for (std::size_t a = 0; a <= a_max; ++a) {
    const double mu = static_cast<double>(a) / nd;
    const double wmu = path[a];
    const double one_minus_mu = 1.0 - mu;
    const auto lo = static_cast<std::size_t>(
        std::ceil((mu + epsilon * one_minus_mu) * nd));
    const auto hi = static_cast<std::size_t>(
        std::floor((1.0 - epsilon * one_minus_mu) * nd));
    for (std::size_t l = lo; l <= hi; ++l) {
      const double lam = static_cast<double>(l) / nd;
      const double num =
          (lam - mu) * w1 + (1.0 - lam) * wmu - one_minus_mu * path[l];
      const double val =
          num * num / ((1.0 - lam) * one_minus_mu * (lam - mu));
      if (val > sup) sup = val;
    }
  }
  return sup;
}

}  // namespace detail

QuantileTable limit_distribution_quantiles(double d, double mu_bar,
                                           double epsilon, std::size_t grid,
                                           std::size_t reps,
                                           std::span<const double> probs,
                                           std::uint64_t seed,
                                           unsigned threads) {
  if (grid < 200)
    throw std::invalid_argument("limit_distribution_quantiles: grid < 200");
  if (reps < 500)
    throw std::invalid_argument("limit_distribution_quantiles: reps < 500");
  if (!(mu_bar >= 0.0 && mu_bar < 1.0))
    throw std::invalid_argument("limit_distribution_quantiles: mu_bar outside [0, 1)");
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw std::invalid_argument("limit_distribution_quantiles: epsilon outside (0, 0.5)");

  std::vector<double> sups(reps);
  parallel_for(reps, threads, [&](std::size_t r) {
    const auto path = gen_fbm_path(d, grid, derive_seed(seed, r));
    sups[r] = detail::dsw_limit_sup(path, mu_bar, epsilon);
  });
  std::sort(sups.begin(), sups.end());

  QuantileTable table;
  table.reps = reps;
  table.probs.assign(probs.begin(), probs.end());
  for (double p : probs) table.values.push_back(quantile_sorted(sups, p));
  return table;
}

}  // namespace dsw
