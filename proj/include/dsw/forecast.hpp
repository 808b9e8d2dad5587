#ifndef DSW_FORECAST_HPP
#define DSW_FORECAST_HPP

#include <string>
#include <vector>

#include "dsw/time_series.hpp"

namespace dsw {

enum class Scheme { Fixed, Rolling, Recursive };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);

// Forecast model and origin convention. ar_order = 0 is the in-sample
// constant mean; p >= 1 fits an AR(p) with intercept by least squares.
struct ForecastSpec {
  int ar_order = 0;
  Scheme scheme = Scheme::Fixed;
  std::size_t horizon = 1;  // tau

  void validate() const;
};

// Out-of-sample squared error losses L_i = (y_{m+tau+i-1} - yhat)^2,
// i = 1..n with n = T - m - tau + 1.
struct LossSeries {
  std::vector<double> losses;
  std::size_t m = 0;
  std::size_t n = 0;
};

LossSeries oos_losses(const TimeSeries& series, std::size_t m,
                      const ForecastSpec& spec);

}  // namespace dsw

#endif
