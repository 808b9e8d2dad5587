#include "dsw/time_series.hpp"

#include <cmath>
#include <stdexcept>

namespace dsw {

void TimeSeries::validate() const {
  if (values.size() < 2)
    throw std::invalid_argument("TimeSeries: need at least 2 observations");
  for (double v : values)
    if (!std::isfinite(v))
      throw std::invalid_argument("TimeSeries: non-finite value");
  if (!dates.empty()) {
    if (dates.size() != values.size())
      throw std::invalid_argument("TimeSeries: dates not aligned with values");
    for (std::size_t i = 1; i < dates.size(); ++i)
      if (!(dates[i - 1] < dates[i]))
        throw std::invalid_argument("TimeSeries: dates not strictly increasing");
  }
}

}  // namespace dsw
