#include "dsw/sim.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "dsw/common.hpp"
#include "fft.hpp"

namespace dsw {

namespace {

// Largest root modulus of the AR characteristic polynomial
// z^p - ar[0] z^{p-1} - ... - ar[p-1], via Durand-Kerner.
double max_char_root(const std::vector<double>& ar) {
  const std::size_t p = ar.size();
  std::vector<std::complex<double>> roots(p);
  std::complex<double> w(0.4, 0.9);
  std::complex<double> z(1.0, 0.0);
  for (auto& r : roots) {
    r = z;
    z *= w;
  }
  auto poly = [&](std::complex<double> x) {
    std::complex<double> v(1.0, 0.0);
    for (std::size_t i = 0; i < p; ++i) v = v * x - ar[i];
    return v;
  };
  for (int iter = 0; iter < 200; ++iter) {
    double move = 0.0;
    for (std::size_t i = 0; i < p; ++i) {
      std::complex<double> denom(1.0, 0.0);
      for (std::size_t j = 0; j < p; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      const std::complex<double> delta = poly(roots[i]) / denom;
      roots[i] -= delta;
      move = std::max(move, std::abs(delta));
    }
    if (move < 1e-12) break;
  }
  double rmax = 0.0;
  for (const auto& r : roots) rmax = std::max(rmax, std::abs(r));
  return rmax;
}

}  // namespace

void ArfimaSpec::validate() const {
  if (!(d >= 0.0 && d < 0.5))
    throw std::invalid_argument("ArfimaSpec: d must lie in [0, 0.5)");
  if (!(sigma > 0.0)) throw std::invalid_argument("ArfimaSpec: sigma must be > 0");
  if (!ar.empty() && max_char_root(ar) >= 1.0 - 1e-10)
    throw std::invalid_argument("ArfimaSpec: AR polynomial is not stationary");
}

std::vector<double> acvf_fwn(double d, double sigma, std::size_t max_lag) {
  if (!(d > -0.5 && d < 0.5))
    throw std::invalid_argument("acvf_fwn: d outside (-0.5, 0.5)");
  if (!(sigma > 0.0)) throw std::invalid_argument("acvf_fwn: sigma must be > 0");
  std::vector<double> g(max_lag + 1, 0.0);
  if (d == 0.0) {
    g[0] = sigma * sigma;
    return g;
  }
  g[0] = sigma * sigma *
         std::exp(std::lgamma(1.0 - 2.0 * d) - 2.0 * std::lgamma(1.0 - d));
  for (std::size_t k = 1; k <= max_lag; ++k)
    g[k] = g[k - 1] * (static_cast<double>(k) - 1.0 + d) /
           (static_cast<double>(k) - d);
  return g;
}

namespace detail {

std::vector<double> circulant_sample(const std::vector<double>& acvf,
                                     std::size_t n, std::mt19937_64& rng) {
  if (acvf.size() < n + 1)
    throw std::invalid_argument("circulant_sample: acvf too short");
  const std::size_t m = 2 * n;
  std::vector<std::complex<double>> c(m);
  for (std::size_t j = 0; j <= n; ++j) c[j] = {acvf[j], 0.0};
  for (std::size_t j = 1; j < n; ++j) c[m - j] = {acvf[j], 0.0};

  std::vector<std::complex<double>> eig(m);
  fft_forward(c, eig);
  double max_eig = 0.0;
  for (const auto& e : eig) max_eig = std::max(max_eig, e.real());
  std::vector<double> lambda(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double v = eig[k].real();
    if (v < -1e-9 * max_eig) return {};  // not nonnegative definite
    lambda[k] = std::max(v, 0.0);
  }

  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::complex<double>> v(m);
  v[0] = {std::sqrt(lambda[0]) * gauss(rng), 0.0};
  v[n] = {std::sqrt(lambda[n]) * gauss(rng), 0.0};
  for (std::size_t k = 1; k < n; ++k) {
    const double s = std::sqrt(lambda[k] / 2.0);
    const double a = gauss(rng), b = gauss(rng);
    v[k] = {s * a, s * b};
    v[m - k] = std::conj(v[k]);
  }
  std::vector<std::complex<double>> path(m);
  fft_forward(v, path);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = path[j].real() * scale;
  return out;
}

std::vector<double> durbin_levinson_sample(const std::vector<double>& acvf,
                                           std::size_t n, std::mt19937_64& rng) {
  if (acvf.size() < n)
    throw std::invalid_argument("durbin_levinson_sample: acvf too short");
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> x(n), phi(n, 0.0), prev(n, 0.0);
  double v = acvf[0];
  x[0] = std::sqrt(v) * gauss(rng);
  for (std::size_t t = 1; t < n; ++t) {
    double acc = acvf[t];
    for (std::size_t j = 1; j < t; ++j) acc -= prev[j] * acvf[t - j];
    const double k = acc / v;
    phi[t] = k;
    for (std::size_t j = 1; j < t; ++j) phi[j] = prev[j] - k * prev[t - j];
    v *= (1.0 - k * k);
    if (v <= 0.0) throw numeric_error("durbin_levinson_sample: ACVF not positive definite");
    double mean = 0.0;
    for (std::size_t j = 1; j <= t; ++j) mean += phi[j] * x[t - j];
    x[t] = mean + std::sqrt(v) * gauss(rng);
    std::copy(phi.begin(), phi.begin() + static_cast<long>(t) + 1, prev.begin());
  }
  return x;
}

}  // namespace detail

TimeSeries gen_arfima(const ArfimaSpec& spec, std::size_t length,
                      std::uint64_t seed) {
  spec.validate();
  if (length < 2) throw std::invalid_argument("gen_arfima: length must be >= 2");

  const bool filtered = !spec.ar.empty() || !spec.ma.empty();
  const std::size_t n = length + (filtered ? spec.burn_in : 0);

  std::mt19937_64 rng(seed);
  const auto g = acvf_fwn(spec.d, spec.sigma, n);
  std::vector<double> e = detail::circulant_sample(g, n, rng);
  if (e.empty()) {
    rng.seed(seed);  // fallback consumes a fresh stream
    e = detail::durbin_levinson_sample(g, n, rng);
  }

  std::vector<double> x;
  if (!filtered) {
    x = std::move(e);
  } else {
    x.assign(n, 0.0);
    for (std::size_t t = 0; t < n; ++t) {
      double v = e[t];
      for (std::size_t j = 0; j < spec.ma.size(); ++j)
        if (t > j) v += spec.ma[j] * e[t - 1 - j];
      for (std::size_t i = 0; i < spec.ar.size(); ++i)
        if (t > i) v += spec.ar[i] * x[t - 1 - i];
      x[t] = v;
    }
    x.erase(x.begin(), x.begin() + static_cast<long>(spec.burn_in));
  }
  for (double& v : x) v += spec.mean;

  TimeSeries out;
  out.values = std::move(x);
  return out;
}

TimeSeries apply_break(const TimeSeries& series, const BreakSpec& brk) {
  series.validate();
  const std::size_t n = series.size();
  if (brk.at < 1 || brk.at > n)
    throw std::invalid_argument("apply_break: break index out of range");
  TimeSeries out = series;
  const std::size_t first = brk.at - 1;
  if (brk.kind == BreakSpec::Kind::MeanShift) {
    for (std::size_t i = first; i < n; ++i) out.values[i] += brk.magnitude;
  } else {
    if (!(brk.magnitude > 0.0))
      throw std::invalid_argument("apply_break: variance factor must be > 0");
    if (first == 0)
      throw std::invalid_argument(
          "apply_break: variance shift needs a pre-break segment");
    double pre_mean = 0.0;
    for (std::size_t i = 0; i < first; ++i) pre_mean += series.values[i];
    pre_mean /= static_cast<double>(first);
    for (std::size_t i = first; i < n; ++i)
      out.values[i] = pre_mean + (series.values[i] - pre_mean) * brk.magnitude;
  }
  return out;
}

std::vector<double> gen_fbm_path(double d, std::size_t grid_points,
                                 std::uint64_t seed) {
  if (!(d > -0.5 && d < 0.5))
    throw std::invalid_argument("gen_fbm_path: d outside (-0.5, 0.5)");
  if (grid_points < 2)
    throw std::invalid_argument("gen_fbm_path: need at least 2 grid points");
  const std::size_t n = grid_points;

  std::mt19937_64 rng(seed);
  const auto g = acvf_fwn(d, 1.0, n);
  std::vector<double> e = detail::circulant_sample(g, n, rng);
  if (e.empty()) {
    rng.seed(seed);
    e = detail::durbin_levinson_sample(g, n, rng);
  }

  // Var of the full partial sum, so that Var[W(1)] = 1 exactly.
  double var_total = static_cast<double>(n) * g[0];
  for (std::size_t k = 1; k < n; ++k)
    var_total += 2.0 * static_cast<double>(n - k) * g[k];
  const double scale = 1.0 / std::sqrt(var_total);

  std::vector<double> w(n + 1, 0.0);
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    acc += e[j];
    w[j + 1] = acc * scale;
  }
  return w;
}

}  // namespace dsw
