#include "eudrec/api/number_format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace eudrec::api {
namespace {

struct Scaled {
  bool negative = false;
  long long thousandths = 0;  // |value| * 1000, rounded half-up
};

// Rounds on the decimal expansion printed to nine places, so values such
// as 2.8855 (stored as 2.88549999...) round the way they read.
Scaled scale(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("cannot format a non-finite number");
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", std::fabs(value));
  const char* dot = buf;
  while (*dot != '.' && *dot != '\0') ++dot;
  const long long whole = std::strtoll(buf, nullptr, 10);
  long long frac = 0;
  int round_digit = 0;
  if (*dot == '.') {
    for (int i = 1; i <= 3; ++i) frac = frac * 10 + (dot[i] - '0');
    round_digit = dot[4] - '0';
  }
  Scaled s;
  s.thousandths = whole * 1000 + frac + (round_digit >= 5 ? 1 : 0);
  s.negative = value < 0.0 && s.thousandths != 0;
  return s;
}

}  // namespace

std::string format_decimal3(double value) {
  const Scaled s = scale(value);
  std::string out = s.negative ? "-" : "";
  out += std::to_string(s.thousandths / 1000);
  long long frac = s.thousandths % 1000;
  if (frac != 0) {
    char digits[8];
    std::snprintf(digits, sizeof(digits), "%03lld", frac);
    std::string f(digits);
    while (!f.empty() && f.back() == '0') f.pop_back();
    out += "." + f;
  }
  return out;
}

nlohmann::ordered_json json_decimal3(double value) {
  const Scaled s = scale(value);
  if (s.thousandths % 1000 == 0) {
    const long long whole = s.thousandths / 1000;
    return s.negative ? -whole : whole;
  }
  return std::strtod(format_decimal3(value).c_str(), nullptr);
}

std::string format_range(double low, double high) {
  return format_decimal3(low) + " - " + format_decimal3(high);
}

}  // namespace eudrec::api
