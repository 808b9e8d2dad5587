#include "dsw/forecast.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace dsw {

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::Fixed: return "fixed";
    case Scheme::Rolling: return "rolling";
    default: return "recursive";
  }
}

Scheme scheme_from_string(const std::string& s) {
  if (s == "fixed") return Scheme::Fixed;
  if (s == "rolling") return Scheme::Rolling;
  if (s == "recursive") return Scheme::Recursive;
  throw std::invalid_argument("unknown forecast scheme: " + s);
}

void ForecastSpec::validate() const {
  if (ar_order < 0) throw std::invalid_argument("ForecastSpec: ar_order < 0");
  if (horizon < 1) throw std::invalid_argument("ForecastSpec: horizon < 1");
}

namespace {

// AR(p) with intercept fitted by least squares on y[first..last] (0-based,
// inclusive). coef = (c, phi_1..phi_p). A singular design (e.g. a constant
// window) falls back to the window mean.
std::vector<double> fit_ar(const std::vector<double>& y, std::size_t first,
                           std::size_t last, int p) {
  const std::size_t dim = static_cast<std::size_t>(p) + 1;
  std::vector<double> xtx(dim * dim, 0.0), xty(dim, 0.0);
  for (std::size_t t = first + static_cast<std::size_t>(p); t <= last; ++t) {
    std::vector<double> row(dim, 1.0);
    for (int i = 1; i <= p; ++i) row[static_cast<std::size_t>(i)] = y[t - static_cast<std::size_t>(i)];
    for (std::size_t a = 0; a < dim; ++a) {
      xty[a] += row[a] * y[t];
      for (std::size_t b = 0; b <= a; ++b) xtx[a * dim + b] += row[a] * row[b];
    }
  }
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b) xtx[a * dim + b] = xtx[b * dim + a];

  // Cholesky solve.
  std::vector<double> chol(dim * dim, 0.0);
  bool ok = true;
  for (std::size_t i = 0; i < dim && ok; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = xtx[i * dim + j];
      for (std::size_t k = 0; k < j; ++k) s -= chol[i * dim + k] * chol[j * dim + k];
      if (i == j) {
        if (s <= 1e-12 * (1.0 + std::fabs(xtx[i * dim + i]))) {
          ok = false;
          break;
        }
        chol[i * dim + i] = std::sqrt(s);
      } else {
        chol[i * dim + j] = s / chol[j * dim + j];
      }
    }
  }
  std::vector<double> coef(dim, 0.0);
  if (!ok) {
    double mean = 0.0;
    for (std::size_t t = first; t <= last; ++t) mean += y[t];
    coef[0] = mean / static_cast<double>(last - first + 1);
    return coef;
  }
  std::vector<double> z(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    double s = xty[i];
    for (std::size_t k = 0; k < i; ++k) s -= chol[i * dim + k] * z[k];
    z[i] = s / chol[i * dim + i];
  }
  for (std::size_t ii = dim; ii-- > 0;) {
    double s = z[ii];
    for (std::size_t k = ii + 1; k < dim; ++k) s -= chol[k * dim + ii] * coef[k];
    coef[ii] = s / chol[ii * dim + ii];
  }
  return coef;
}

// Iterated tau-step-ahead AR forecast from origin t (0-based index of the
// last observed value).
double forecast_ar(const std::vector<double>& y, std::size_t origin,
                   const std::vector<double>& coef, int p, std::size_t tau) {
  if (p == 0) return coef[0];
  std::vector<double> lags(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) lags[static_cast<std::size_t>(i)] = y[origin - static_cast<std::size_t>(i)];
  double pred = 0.0;
  for (std::size_t h = 0; h < tau; ++h) {
    pred = coef[0];
    for (int i = 0; i < p; ++i) pred += coef[static_cast<std::size_t>(i) + 1] * lags[static_cast<std::size_t>(i)];
    for (int i = p - 1; i > 0; --i) lags[static_cast<std::size_t>(i)] = lags[static_cast<std::size_t>(i) - 1];
    lags[0] = pred;
  }
  return pred;
}

}  // namespace

LossSeries oos_losses(const TimeSeries& series, std::size_t m,
                      const ForecastSpec& spec) {
  series.validate();
  spec.validate();
  const std::size_t T = series.size();
  const std::size_t tau = spec.horizon;
  const int p = spec.ar_order;
  const std::size_t min_m = std::max<std::size_t>(2, static_cast<std::size_t>(p) + 2);
  if (m < min_m)
    throw std::invalid_argument("oos_losses: in-sample size too small for the model");
  if (m + tau > T)
    throw std::invalid_argument("oos_losses: horizon extends beyond the series");

  const auto& y = series.values;
  const std::size_t n = T - m - tau + 1;
  LossSeries out;
  out.m = m;
  out.n = n;
  out.losses.resize(n);

  std::vector<double> prefix(T + 1, 0.0);
  for (std::size_t i = 0; i < T; ++i) prefix[i + 1] = prefix[i] + y[i];
  auto window_mean = [&](std::size_t first, std::size_t last) {
    return (prefix[last + 1] - prefix[first]) / static_cast<double>(last - first + 1);
  };

  std::vector<double> fixed_coef;
  if (spec.scheme == Scheme::Fixed && p > 0) fixed_coef = fit_ar(y, 0, m - 1, p);

  // Origins t = m..T-tau in 1-based terms; 0-based index of the last
  // observation in the information set is t-1.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t origin = m - 1 + i;       // 0-based
    const std::size_t target = origin + tau;    // 0-based
    double yhat;
    switch (spec.scheme) {
      case Scheme::Fixed:
        yhat = p == 0 ? window_mean(0, m - 1)
                      : forecast_ar(y, origin, fixed_coef, p, tau);
        break;
      case Scheme::Rolling: {
        const std::size_t first = origin + 1 - m;
        yhat = p == 0 ? window_mean(first, origin)
                      : forecast_ar(y, origin, fit_ar(y, first, origin, p), p, tau);
        break;
      }
      default:  // Recursive
        yhat = p == 0 ? window_mean(0, origin)
                      : forecast_ar(y, origin, fit_ar(y, 0, origin, p), p, tau);
    }
    const double e = y[target] - yhat;
    out.losses[i] = e * e;
  }
  return out;
}

}  // namespace dsw
