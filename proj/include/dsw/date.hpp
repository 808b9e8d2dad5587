#ifndef DSW_DATE_HPP
#define DSW_DATE_HPP

#include <compare>
#include <string>

namespace dsw {

// Calendar date; enough for CSV ingestion, window mapping and weekday
// filtering. Accepts ISO "YYYY-MM-DD" and U.S. "MM/DD/YYYY" on input.
struct Date {
  int year = 1970;
  int month = 1;
  int day = 1;

  auto operator<=>(const Date&) const = default;

  // Days since 1970-01-01 (proleptic Gregorian).
  long long serial() const;
  // 0 = Sunday ... 6 = Saturday.
  int weekday() const;
  bool is_weekend() const;
  // Months since year 0; keys monthly deflator indices.
  int month_key() const { return year * 12 + (month - 1); }

  std::string iso() const;  // YYYY-MM-DD
  std::string mdy() const;  // MM/DD/YYYY
};

Date parse_date(const std::string& text);
// "YYYY-MM" or a full date; returns the month key.
int parse_month_key(const std::string& text);

}  // namespace dsw

#endif
