#pragma once
// Segmented residual-cofactor sieve and the omega-bucketed accumulator.
//
// One sieve pass over [1, x] produces T[w] = sum of d(n) over n <= x with
// omega(n) = w, as exact 64-bit integers.  S_k(x) = sum_w T[w]/k^w is then
// exact for every k at once; all rounding lives in the final division.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "meanomega/rational.hpp"

namespace meanomega {

std::uint64_t isqrt_u64(std::uint64_t x);

// sum_{j<=x} floor(x/j), the divisor-sum identity used as cross-check.
std::uint64_t hyperbola_sum(std::uint64_t x);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// Ascending enumeration without storing; segmented internally.
void for_primes_up_to(std::uint64_t n, const std::function<void(std::uint64_t)>& f);

// Walks [lo, hi) maintaining a residual cofactor per slot.  For each sieving
// prime the full exponent e is stripped from every multiple in range and
// vis.prime_power(slot, p, e) fires; afterwards any residual > 1 is reported
// via vis.residual(slot, r).  The caller owns the short-prime-list check.
template <class Visitor>
void walk_factored_range(std::uint64_t lo, std::uint64_t hi,
                         const std::vector<std::uint64_t>& primes,
                         Visitor&& vis) {
  const std::uint64_t m = hi - lo;
  std::vector<std::uint64_t> rem(m);
  for (std::uint64_t i = 0; i < m; ++i) rem[i] = lo + i;
  for (std::uint64_t p : primes) {
    if (p * p >= hi) break;
    std::uint64_t first = ((lo + p - 1) / p) * p;
    for (std::uint64_t mult = first; mult < hi; mult += p) {
      std::uint64_t i = mult - lo;
      unsigned e = 0;
      while (rem[i] % p == 0) {
        rem[i] /= p;
        ++e;
      }
      vis.prime_power(i, p, e);
    }
  }
  for (std::uint64_t i = 0; i < m; ++i)
    if (rem[i] > 1) vis.residual(i, rem[i]);
}

struct SieveSegment {
  std::uint64_t lo = 1, hi = 2;  // half-open
  std::vector<std::uint32_t> d;
  std::vector<std::uint8_t> omega;
};

// Exact d and omega per slot; primes must contain all p <= sqrt(hi-1).
SieveSegment sieve_segment(std::uint64_t lo, std::uint64_t hi,
                           const std::vector<std::uint64_t>& primes);

struct OmegaBuckets {
  std::uint64_t x = 0;
  std::vector<std::uint64_t> T;  // T[w], trailing zeros trimmed

  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (auto t : T) s += t;
    return s;
  }
  bool operator==(const OmegaBuckets&) const = default;
};

inline constexpr std::uint64_t kDefaultSegmentSize = std::uint64_t(1) << 20;
inline constexpr std::uint64_t kMaxSieveX = 10'000'000'000ull;  // 64-bit safety margin

// One OmegaBuckets per checkpoint, bit-exact for any segment size and thread
// count: segments never straddle a checkpoint and merge by integer addition.
std::vector<OmegaBuckets> accumulate_buckets(
    std::uint64_t x_max, std::vector<std::uint64_t> checkpoints,
    std::uint64_t segment_size = kDefaultSegmentSize, unsigned threads = 0);

// S_k(x) = sum_w T[w]/k^w, exact and as its double image.
std::pair<Rational, double> exact_mean_sum(const OmegaBuckets& buckets, unsigned k);

// sum_{n<=cp} tau_z(n) per checkpoint.  Per-segment partials are reduced in
// segment order with compensated summation, so results are deterministic
// for any thread count.
std::vector<double> tauz_prefix_sums(
    double z, std::vector<std::uint64_t> checkpoints,
    std::uint64_t segment_size = kDefaultSegmentSize, unsigned threads = 0);

} // namespace meanomega
