#pragma once
// The asymptotic mean-value constant C_k as an Euler product, in both
// published variants, evaluated two independent ways: plain truncated
// product, and small-prime product times a prime-zeta accelerated tail.

#include <cstdint>
#include <string>
#include <vector>

#include "meanomega/rational.hpp"

namespace meanomega {

// thm3: prod (1-1/p)^{2/k} (1 + (2p-1)/(k (p-1)^2))      <- authoritative
// thm1: prod (1-1/p)^{2/k} (1 + (2p-1)/(k p (p-1)^2))    <- variant, kept
// for the discrepancy check.  The extra p makes the thm1 log-factor ~ -2/(kp),
// so its raw product creeps toward 0 as the prime bound grows; values carry
// their truncation so they stay interpretable.
enum class Variant { thm3, thm1 };

const char* variant_name(Variant v);
Variant parse_variant(const std::string& s);

struct EulerConstantResult {
  unsigned k = 2;
  Variant variant = Variant::thm3;
  double value = 0;
  enum class Method { direct, series } method = Method::direct;
  std::uint64_t prime_limit = 0;  // P for direct, p0 for series
  unsigned series_order = 0;      // M for series, 0 for direct
  double tail_estimate = 0;
};

// sum over primes p > exclude_below of p^{-s}, via the Moebius-weighted
// log-zeta series; absolute error <= 1e-13
double prime_zeta(double s, std::uint64_t exclude_below = 0);

// exact power-series coefficients c[0..M] of log(local factor) in t = 1/p.
// c[1] vanishes identically for thm3 (the absolute-convergence witness);
// for thm1 it is -2/k.
std::vector<Rational> local_log_coeffs(unsigned k, Variant variant, unsigned M);

EulerConstantResult euler_constant_direct(unsigned k, Variant variant,
                                          std::uint64_t prime_limit);

EulerConstantResult euler_constant_series(unsigned k, Variant variant,
                                          std::uint64_t p0, unsigned M);

// lhs = (2/k) sum_{u<p<=v} 1/p, rhs = (2/k) log(log v/log u)
std::pair<double, double> mertens_window(unsigned k, std::uint64_t u,
                                         std::uint64_t v);

} // namespace meanomega
