#pragma once
// Single-value factorization paths: trial division oracle, the function
// d(n)/k^omega(n) as an exact rational, and tau_z assembled from exponents.

#include <cstdint>
#include <utility>
#include <vector>

#include "meanomega/rational.hpp"

namespace meanomega {

struct Factorization {
  std::uint64_t n = 1;
  // (prime, exponent), primes strictly increasing, exponents >= 1
  std::vector<std::pair<std::uint64_t, unsigned>> factors;

  unsigned omega() const { return unsigned(factors.size()); }
  std::uint64_t divisor_count() const {
    std::uint64_t d = 1;
    for (auto [p, a] : factors) d *= a + 1;
    return d;
  }
};

// Trial division; n = 1 yields the empty list.
Factorization factorize(std::uint64_t n);

// d(n)/k^omega(n) in lowest terms.
Rational dkw_value(unsigned k, std::uint64_t n);

// tau_z(n) = prod over p^a || n of binom(z+a-1, a).
double tau_z_value(double z, std::uint64_t n);

} // namespace meanomega
