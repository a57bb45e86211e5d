#include "meanomega/format.hpp"

#include <cstdio>
#include <cstdlib>

namespace meanomega {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

double canon(double v) {
  return std::strtod(format_double(v).c_str(), nullptr);
}

} // namespace meanomega
