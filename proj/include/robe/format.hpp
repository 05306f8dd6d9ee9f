#pragma once

#include <cstdio>
#include <string>

namespace robe {

/// Render a double with 17 significant digits, enough to round-trip exactly.
inline std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace robe
