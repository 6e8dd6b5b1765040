#pragma once

#include <cmath>
#include <cstdio>
#include <span>
#include <string>

namespace weylmech {

/// Decimal rendering with 17 significant digits; non-finite values become null.
inline std::string json_number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string json_array(std::span<const double> xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += json_number(xs[i]);
  }
  return out + "]";
}

}  // namespace weylmech
