#pragma once
// Numeric verification harness: Chebyshev theta, the four prime-sum lemma
// checks, the tau_z mean value, the main-term comparison with normalized
// error, and the constant-variant discrepancy verdict.

#include <cstdint>
#include <string>
#include <vector>

#include "meanomega/euler_product.hpp"
#include "meanomega/sieve.hpp"

namespace meanomega {

struct LemmaReport {
  std::string lemma_id;          // L1, L2, L3, L4, L6, Shiu, Discrepancy
  std::vector<double> measured;
  std::vector<double> bound;
  bool pass = false;
  std::string detail;
};

struct ComparisonRow {
  std::uint64_t x = 2;
  Rational S_exact;
  double S = 0;       // float image of S_exact
  double M = 0;       // main term
  double ratio = 0;   // S/M
  double e_norm = 0;  // (S - M)/(x (log x)^{2/k-2})
};

// sum_{p<=x} log p, compensated
double theta(std::uint64_t x);
// same, at several checkpoints from one prime pass
std::vector<double> theta_ladder(const std::vector<std::uint64_t>& checkpoints);

// prime sum against the Chebyshev-style bound (2/k) 1.000081 x
LemmaReport lemma1_check(unsigned k, std::uint64_t x);

// r(x) = |(2/k)theta(x) - (2/k)x|/x must decrease along the checkpoints
LemmaReport lemma2_check(unsigned k, const std::vector<std::uint64_t>& checkpoints);

// (4/k^2) sum log p/p^2 against 4 log 4/k^2, plus the auxiliary
// sum_m log m/(m(m-1)) < log 4 witness
LemmaReport lemma3_check(unsigned k, std::uint64_t x);

// prime-power double sum, direct vs per-prime closed form, against 28/k
LemmaReport lemma4_check(unsigned k, std::uint64_t x, unsigned alpha_max = 60);

// sum tau_z(n) against x (log x)^{z-1}/Gamma(z); pass = no growth trend of
// the normalized error (later-half max within 1.25x of earlier-half max)
LemmaReport tauz_mean_check(double z, const std::vector<std::uint64_t>& checkpoints,
                            std::uint64_t segment_size = kDefaultSegmentSize,
                            unsigned threads = 0);

// C x (log x)^{2/k-1} / Gamma(2/k)
double main_term(unsigned k, std::uint64_t x, double C);

// one row per checkpoint; buckets must span >= 3 checkpoints over >= 3 decades
std::vector<ComparisonRow> compare_series(unsigned k,
                                          const std::vector<OmegaBuckets>& buckets,
                                          const EulerConstantResult& constant);

// S/M ratio sequences under both constant variants; verdict = the variant
// whose final |ratio - 1| is under half the other's
LemmaReport discrepancy_check(unsigned k, const std::vector<OmegaBuckets>& buckets);

// S_k(x) / (x (log x)^{2/k-1}) per checkpoint, for boundedness inspection
std::vector<double> shiu_ratios(unsigned k, const std::vector<OmegaBuckets>& buckets);

} // namespace meanomega
