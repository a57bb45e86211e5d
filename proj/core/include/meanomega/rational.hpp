#pragma once
// Exact rational values ride on GMP's mpq_class: canonical form (reduced,
// positive denominator) matches the invariants we need, and mpq_get_d is
// within one ulp of the true quotient.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace meanomega {

using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational q{BigInt(num), BigInt(den)};
  q.canonicalize();
  return q;
}

inline std::string num_string(const Rational& q) { return q.get_num().get_str(); }
inline std::string den_string(const Rational& q) { return q.get_den().get_str(); }

} // namespace meanomega
