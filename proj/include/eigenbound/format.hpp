#pragma once

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace eigenbound {

// Decimal formatting with 17 significant digits: enough to round-trip any
// double exactly, locale-independent.
inline std::string fmt17(double x) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), x,
                           std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline double parse_f64(const std::string& s) {
  double x = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc{})
    throw std::runtime_error("parse_f64: bad float '" + s + "'");
  return x;
}

}  // namespace eigenbound
