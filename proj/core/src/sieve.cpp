#include "meanomega/sieve.hpp"

#include <cmath>
#include <stdexcept>

namespace meanomega {

std::uint64_t isqrt_u64(std::uint64_t x) {
  if (x == 0) return 0;
  auto r = std::uint64_t(std::sqrt(double(x)));
  // cap at floor(sqrt(2^64 - 1)) so the squares below cannot wrap
  constexpr std::uint64_t kRootMax = 4294967295ull;
  if (r > kRootMax) r = kRootMax;
  while (r > 0 && r * r > x) --r;
  while (r < kRootMax && (r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::uint64_t hyperbola_sum(std::uint64_t x) {
  std::uint64_t r = isqrt_u64(x), s = 0;
  for (std::uint64_t j = 1; j <= r; ++j) s += x / j;
  return 2 * s - r * r;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for_primes_up_to(n, [&](std::uint64_t p) { out.push_back(p); });
  return out;
}

void for_primes_up_to(std::uint64_t n,
                      const std::function<void(std::uint64_t)>& f) {
  if (n < 2) return;
  const std::uint64_t root = isqrt_u64(n);
  // base primes by a plain byte sieve
  std::vector<std::uint8_t> base(root + 1, 1);
  std::vector<std::uint64_t> bp;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!base[i]) continue;
    bp.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) base[j] = 0;
  }
  const std::uint64_t kBlock = std::uint64_t(1) << 21;
  std::vector<std::uint8_t> seg;
  for (std::uint64_t lo = 2; lo <= n; lo += kBlock) {
    std::uint64_t hi = std::min(n + 1, lo + kBlock);
    seg.assign(hi - lo, 1);
    for (std::uint64_t p : bp) {
      if (p * p >= hi) break;
      std::uint64_t first = std::max(p * p, ((lo + p - 1) / p) * p);
      for (std::uint64_t m = first; m < hi; m += p) seg[m - lo] = 0;
    }
    for (std::uint64_t i = 0; i < hi - lo; ++i)
      if (seg[i]) f(lo + i);
  }
}

namespace {
struct SegmentFillVisitor {
  std::vector<std::uint32_t>& d;
  std::vector<std::uint8_t>& omega;
  void prime_power(std::uint64_t i, std::uint64_t, unsigned e) {
    d[i] *= e + 1;
    omega[i] += 1;
  }
  void residual(std::uint64_t i, std::uint64_t) {
    d[i] *= 2;
    omega[i] += 1;
  }
};
} // namespace

SieveSegment sieve_segment(std::uint64_t lo, std::uint64_t hi,
                           const std::vector<std::uint64_t>& primes) {
  if (lo < 1 || hi <= lo)
    throw std::invalid_argument("sieve_segment: need 1 <= lo < hi");
  SieveSegment seg;
  seg.lo = lo;
  seg.hi = hi;
  seg.d.assign(hi - lo, 1);
  seg.omega.assign(hi - lo, 0);

  const std::uint64_t root = isqrt_u64(hi - 1);
  struct CheckingVisitor : SegmentFillVisitor {
    std::uint64_t root;
    void residual(std::uint64_t i, std::uint64_t r) {
      if (r <= root)
        throw std::invalid_argument(
            "sieve_segment: prime list too short for range");
      SegmentFillVisitor::residual(i, r);
    }
  };
  CheckingVisitor vis{{seg.d, seg.omega}, root};
  walk_factored_range(lo, hi, primes, vis);
  return seg;
}

} // namespace meanomega
