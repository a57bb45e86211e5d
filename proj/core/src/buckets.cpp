#include "meanomega/sieve.hpp"
#include "meanomega/special.hpp"
#include "meanomega/util.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <stdexcept>
#include <thread>

namespace meanomega {

namespace {

constexpr unsigned kMaxOmegaSlots = 16;  // omega(n) <= 10 for n <= 1e10

struct SegmentPlan {
  std::uint64_t x = 0;
  // half-open [bounds[i], bounds[i+1]); segments never straddle a checkpoint
  std::vector<std::uint64_t> bounds;
  std::vector<std::uint32_t> interval;  // checkpoint interval per segment
  std::uint64_t max_len = 0;

  std::size_t count() const { return interval.size(); }
};

SegmentPlan plan_segments(std::uint64_t x_max,
                          const std::vector<std::uint64_t>& checkpoints,
                          std::uint64_t segment_size) {
  if (checkpoints.empty())
    throw std::invalid_argument("checkpoints must be nonempty");
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
    throw std::invalid_argument("checkpoints must be sorted ascending");
  if (checkpoints.front() < 1)
    throw std::invalid_argument("checkpoints must be >= 1");
  if (checkpoints.back() > x_max)
    throw std::invalid_argument("checkpoints exceed x_max");
  if (x_max > kMaxSieveX)
    throw std::domain_error("x_max above the 64-bit safety ceiling");
  if (segment_size < 64)
    throw std::invalid_argument("segment size unreasonably small");

  SegmentPlan plan;
  plan.x = checkpoints.back();
  std::vector<std::uint64_t> cuts{1, plan.x + 1};
  for (std::uint64_t b = 1 + segment_size; b <= plan.x; b += segment_size)
    cuts.push_back(b);
  for (std::uint64_t cp : checkpoints)
    if (cp + 1 <= plan.x) cuts.push_back(cp + 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  plan.bounds = std::move(cuts);
  for (std::size_t i = 0; i + 1 < plan.bounds.size(); ++i) {
    std::uint64_t hi = plan.bounds[i + 1];
    auto it = std::lower_bound(checkpoints.begin(), checkpoints.end(), hi - 1);
    plan.interval.push_back(std::uint32_t(it - checkpoints.begin()));
    plan.max_len = std::max(plan.max_len, hi - plan.bounds[i]);
  }
  return plan;
}

unsigned pick_threads(unsigned requested, std::size_t jobs) {
  unsigned t = requested ? requested : std::thread::hardware_concurrency();
  if (t < 1) t = 1;
  return unsigned(std::min<std::size_t>(t, jobs));
}

struct BucketVisitor {
  std::uint32_t* d;
  std::uint8_t* omega;
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

std::vector<OmegaBuckets> accumulate_buckets(std::uint64_t x_max,
                                             std::vector<std::uint64_t> checkpoints,
                                             std::uint64_t segment_size,
                                             unsigned threads) {
  SegmentPlan plan = plan_segments(x_max, checkpoints, segment_size);
  const std::size_t n_int = checkpoints.size();
  const auto primes = primes_up_to(isqrt_u64(plan.x));
  const unsigned nt = pick_threads(threads, plan.count());

  // one tally matrix per worker; the merge is integer addition, so the
  // result is independent of which worker claimed which segment
  std::vector<std::vector<std::uint64_t>> tallies(
      nt, std::vector<std::uint64_t>(n_int * kMaxOmegaSlots, 0));
  std::atomic<std::size_t> next{0};

  auto work = [&](unsigned wid) {
    std::vector<std::uint32_t> d(plan.max_len);
    std::vector<std::uint8_t> om(plan.max_len);
    auto& tally = tallies[wid];
    for (;;) {
      std::size_t si = next.fetch_add(1);
      if (si >= plan.count()) break;
      std::uint64_t lo = plan.bounds[si], hi = plan.bounds[si + 1];
      std::uint64_t m = hi - lo;
      std::fill_n(d.begin(), m, 1u);
      std::fill_n(om.begin(), m, std::uint8_t(0));
      BucketVisitor vis{d.data(), om.data()};
      walk_factored_range(lo, hi, primes, vis);
      std::uint64_t* row = tally.data() + std::size_t(plan.interval[si]) * kMaxOmegaSlots;
      for (std::uint64_t i = 0; i < m; ++i) {
        assert(om[i] < kMaxOmegaSlots);
        row[om[i]] += d[i];
      }
    }
  };

  if (nt == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned wid = 0; wid < nt; ++wid) pool.emplace_back(work, wid);
    for (auto& th : pool) th.join();
  }

  // merge workers, then prefix over checkpoint intervals
  std::vector<std::uint64_t> acc(kMaxOmegaSlots, 0);
  std::vector<OmegaBuckets> out;
  out.reserve(n_int);
  for (std::size_t ci = 0; ci < n_int; ++ci) {
    for (unsigned wid = 0; wid < nt; ++wid) {
      const std::uint64_t* row = tallies[wid].data() + ci * kMaxOmegaSlots;
      for (unsigned w = 0; w < kMaxOmegaSlots; ++w) {
        assert(acc[w] <= ~row[w]);  // no 64-bit wrap for x <= 1e10
        acc[w] += row[w];
      }
    }
    OmegaBuckets b;
    b.x = checkpoints[ci];
    unsigned top = kMaxOmegaSlots;
    while (top > 1 && acc[top - 1] == 0) --top;
    b.T.assign(acc.begin(), acc.begin() + top);
    out.push_back(std::move(b));
  }
  return out;
}

std::pair<Rational, double> exact_mean_sum(const OmegaBuckets& buckets, unsigned k) {
  if (k < 2) throw std::domain_error("exact_mean_sum: k must be >= 2");
  if (buckets.T.empty()) throw std::invalid_argument("empty buckets");
  // Horner over descending powers: sum_w T[w] k^{W-w} / k^W
  BigInt num = 0;
  for (std::uint64_t t : buckets.T) {
    num *= k;
    num += BigInt(static_cast<unsigned long>(t));
  }
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), k, buckets.T.size() - 1);
  Rational q(num, den);
  q.canonicalize();
  return {q, q.get_d()};
}

std::vector<double> tauz_prefix_sums(double z,
                                     std::vector<std::uint64_t> checkpoints,
                                     std::uint64_t segment_size,
                                     unsigned threads) {
  SegmentPlan plan = plan_segments(kMaxSieveX, checkpoints, segment_size);
  const auto primes = primes_up_to(isqrt_u64(plan.x));
  const unsigned nt = pick_threads(threads, plan.count());

  // tau_z(p^e) depends on e only; exponents are < 64 for 64-bit n
  double table[64];
  table[0] = 1.0;
  for (unsigned e = 1; e < 64; ++e) table[e] = binomial_general(z + e - 1, e);

  struct TauVisitor {
    double* val;
    const double* table;
    void prime_power(std::uint64_t i, std::uint64_t, unsigned e) {
      val[i] *= table[e];
    }
    void residual(std::uint64_t i, std::uint64_t) { val[i] *= table[1]; }
  };

  std::vector<double> partial(plan.count(), 0.0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    std::vector<double> val(plan.max_len);
    for (;;) {
      std::size_t si = next.fetch_add(1);
      if (si >= plan.count()) break;
      std::uint64_t lo = plan.bounds[si], hi = plan.bounds[si + 1];
      std::uint64_t m = hi - lo;
      std::fill_n(val.begin(), m, 1.0);
      TauVisitor vis{val.data(), table};
      walk_factored_range(lo, hi, primes, vis);
      Kahan acc;
      for (std::uint64_t i = 0; i < m; ++i) acc.add(val[i]);
      partial[si] = acc.value();  // distinct slot per segment: no race
    }
  };

  if (nt == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned wid = 0; wid < nt; ++wid) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  // ordered reduction: segment index order fixes the floating-point result
  std::vector<double> out(checkpoints.size(), 0.0);
  Kahan acc;
  std::size_t ci = 0;
  for (std::size_t si = 0; si < plan.count(); ++si) {
    while (ci < checkpoints.size() && plan.bounds[si] > checkpoints[ci])
      out[ci++] = acc.value();
    acc.add(partial[si]);
  }
  while (ci < checkpoints.size()) out[ci++] = acc.value();
  return out;
}

} // namespace meanomega
