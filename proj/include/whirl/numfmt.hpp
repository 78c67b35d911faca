#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace whirl {

// Shortest decimal form that parses back to the same double.
inline std::string fmt_shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Fixed 17 significant digits; round-trips exactly, trailing zeros dropped.
inline std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Display precision for human-facing output.
inline std::string fmt_g15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

}  // namespace whirl
