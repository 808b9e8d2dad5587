#include "dsw/date.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>

namespace dsw {

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
  static constexpr std::array<int, 12> len = {31, 28, 31, 30, 31, 30,
                                              31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return len[m - 1];
}

void check(const Date& d, const std::string& text) {
  if (d.month < 1 || d.month > 12 || d.day < 1 ||
      d.day > days_in_month(d.year, d.month))
    throw std::invalid_argument("invalid calendar date: " + text);
}

}  // namespace

long long Date::serial() const {
  // Howard Hinnant's days-from-civil algorithm.
  const int y = year - (month <= 2 ? 1 : 0);
  const long long era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy =
      (153u * static_cast<unsigned>(month + (month > 2 ? -3 : 9)) + 2u) / 5u +
      static_cast<unsigned>(day) - 1u;
  const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
  return era * 146097LL + static_cast<long long>(doe) - 719468LL;
}

int Date::weekday() const {
  const long long s = serial();
  return static_cast<int>(((s % 7) + 11) % 7);  // 1970-01-01 was a Thursday
}

bool Date::is_weekend() const {
  const int w = weekday();
  return w == 0 || w == 6;
}

std::string Date::iso() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

std::string Date::mdy() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%02d/%02d/%04d", month, day, year);
  return buf;
}

Date parse_date(const std::string& text) {
  Date d;
  int a = 0, b = 0, c = 0;
  if (std::sscanf(text.c_str(), "%d-%d-%d", &a, &b, &c) == 3) {
    d = Date{a, b, c};
  } else if (std::sscanf(text.c_str(), "%d/%d/%d", &a, &b, &c) == 3) {
    d = Date{c, a, b};
  } else {
    throw std::invalid_argument("unparseable date: " + text);
  }
  check(d, text);
  return d;
}

int parse_month_key(const std::string& text) {
  int y = 0, m = 0;
  if (std::sscanf(text.c_str(), "%d-%d", &y, &m) == 2 && text.size() <= 7) {
    if (m < 1 || m > 12) throw std::invalid_argument("invalid month: " + text);
    return y * 12 + (m - 1);
  }
  return parse_date(text).month_key();
}

}  // namespace dsw
