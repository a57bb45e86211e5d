#pragma once
// Canonical float formatting: every double is snapped to the value its
// 15-significant-digit decimal image parses back to, before any emission.
// CSV and JSON then encode bit-identical values.

#include <string>

namespace meanomega {

// strtod("%.15g" image).  Idempotent: doubles are finer than 15-digit
// decimals, so the snapped value re-prints to the same digits.
double canon(double v);

// "%.15g" of canon(v)
std::string format_double(double v);

} // namespace meanomega
