#pragma once

// Number formatting shared by the report writer, the figure emitters and the
// CLI: 17 significant digits, which round-trips IEEE doubles exactly and
// keeps emitted artifacts byte-deterministic.

#include <cmath>
#include <cstdio>
#include <string>

namespace sinebound::detail {

inline std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace sinebound::detail
