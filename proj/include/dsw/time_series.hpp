#ifndef DSW_TIME_SERIES_HPP
#define DSW_TIME_SERIES_HPP

#include <vector>

#include "dsw/date.hpp"

namespace dsw {

// Ordered real-valued observations with an optional calendar index; the
// carrier every module consumes and produces.
struct TimeSeries {
  std::vector<double> values;
  std::vector<Date> dates;  // empty, or aligned 1:1 with values

  std::size_t size() const { return values.size(); }
  bool has_dates() const { return !dates.empty(); }

  // length >= 2, all values finite, dates (if present) aligned and strictly
  // increasing. Throws std::invalid_argument.
  void validate() const;
};

}  // namespace dsw

#endif
