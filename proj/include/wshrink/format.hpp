#pragma once

// Number formatting for CSV/text output.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

namespace wshrink::fmt {

/// Shortest decimal that round-trips to the same double; "" for NaN.
inline std::string full(double x) {
  if (std::isnan(x)) return "";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

/// Fixed-point with `digits` decimals; "-" for NaN.
inline std::string fixed(double x, int digits = 4) {
  if (std::isnan(x)) return "-";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  std::string s(buf);
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

}  // namespace wshrink::fmt
