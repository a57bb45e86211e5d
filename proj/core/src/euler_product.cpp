#include "meanomega/euler_product.hpp"

#include <cmath>
#include <stdexcept>

#include "meanomega/sieve.hpp"
#include "meanomega/special.hpp"
#include "meanomega/util.hpp"

namespace meanomega {

const char* variant_name(Variant v) { return v == Variant::thm3 ? "thm3" : "thm1"; }

Variant parse_variant(const std::string& s) {
  if (s == "thm3") return Variant::thm3;
  if (s == "thm1") return Variant::thm1;
  throw std::invalid_argument("unknown variant: " + s);
}

/* --- prime zeta --- */

namespace {

std::vector<int> moebius_up_to(unsigned n) {
  std::vector<int> mu(n + 1, 1);
  std::vector<bool> composite(n + 1, false);
  for (unsigned p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    for (unsigned m = p; m <= n; m += p) {
      if (m > p) composite[m] = true;
      mu[m] = (m / p) % p == 0 ? 0 : -mu[m];
    }
  }
  return mu;
}

// sum over p <= limit of p^{-s} by direct enumeration
double prime_power_sum_below(double s, std::uint64_t limit) {
  Kahan acc;
  for_primes_up_to(limit, [&](std::uint64_t p) {
    acc.add(std::pow(double(p), -s));
  });
  return acc.value();
}

} // namespace

double prime_zeta(double s, std::uint64_t exclude_below) {
  if (!(s > 1)) throw std::domain_error("prime_zeta: need s > 1");
  // log zeta(ms) < 2^{-ms}(1+o(1)); stop once that is below 3e-18
  unsigned m_max = unsigned(58.0 / s) + 1;
  auto mu = moebius_up_to(m_max);
  Kahan acc;
  for (unsigned m = 1; m <= m_max; ++m) {
    if (m * s > 58 || mu[m] == 0) continue;
    acc.add(mu[m] * std::log(zeta_real(m * s)) / m);
  }
  if (exclude_below >= 2) acc.add(-prime_power_sum_below(s, exclude_below));
  return acc.value();
}

/* --- exact log-factor coefficients --- */

namespace {

using Series = std::vector<Rational>;  // coefficients in t = 1/p

Series mul_trunc(const Series& a, const Series& b, unsigned M) {
  Series out(M + 1, Rational(0));
  for (unsigned i = 0; i <= M; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; i + j <= M; ++j) out[i + j] += a[i] * b[j];
  }
  for (auto& c : out) c.canonicalize();
  return out;
}

} // namespace

std::vector<Rational> local_log_coeffs(unsigned k, Variant variant, unsigned M) {
  if (k < 2) throw std::domain_error("local_log_coeffs: k must be >= 2");
  if (M < 2) throw std::domain_error("local_log_coeffs: M must be >= 2");
  // u(t) = t(2-t)/(k(1-t)^2), the non-zeta part of the log's argument;
  // thm1 carries one more power of t
  Series u(M + 1, Rational(0));
  {
    // (2t - t^2) * sum_j (j+1) t^j / k
    Series geom2(M + 1, Rational(0));
    for (unsigned j = 0; j <= M; ++j) geom2[j] = Rational(j + 1);
    Series num(M + 1, Rational(0));
    unsigned shift = variant == Variant::thm1 ? 1 : 0;
    if (1 + shift <= M) num[1 + shift] = Rational(2);
    if (2 + shift <= M) num[2 + shift] = Rational(-1);
    u = mul_trunc(num, geom2, M);
    for (auto& c : u) {
      c /= k;
      c.canonicalize();
    }
  }
  // log F = (2/k) log(1-t) + log(1+u)
  Series out(M + 1, Rational(0));
  for (unsigned m = 1; m <= M; ++m) {
    out[m] = Rational(-2, long(k) * m);
    out[m].canonicalize();
  }
  Series upow = u;
  for (unsigned i = 1; i <= M; ++i) {
    Rational coef(i % 2 ? 1 : -1, long(i));
    coef.canonicalize();
    for (unsigned m = 0; m <= M; ++m) out[m] += coef * upow[m];
    if (i < M) upow = mul_trunc(upow, u, M);
  }
  for (auto& c : out) c.canonicalize();
  return out;
}

/* --- the two evaluation routes --- */

namespace {

double log_local_factor(unsigned k, Variant variant, std::uint64_t p) {
  double pd = double(p);
  double base = (2.0 / k) * std::log1p(-1.0 / pd);
  double numer = 2.0 * pd - 1.0;
  double denom = double(k) * (pd - 1.0) * (pd - 1.0);
  if (variant == Variant::thm1) denom *= pd;
  return base + std::log1p(numer / denom);
}

// sum_{p <= limit} p^{-m} for m = 2..m_max in one prime pass
std::vector<double> prime_power_sums(std::uint64_t limit, unsigned m_max) {
  std::vector<Kahan> acc(m_max + 1);
  for_primes_up_to(limit, [&](std::uint64_t p) {
    double inv = 1.0 / double(p);
    double pw = inv;
    for (unsigned m = 2; m <= m_max; ++m) {
      pw *= inv;
      if (pw < 1e-21) break;
      acc[m].add(pw);
    }
  });
  std::vector<double> out(m_max + 1, 0.0);
  for (unsigned m = 2; m <= m_max; ++m) out[m] = acc[m].value();
  return out;
}

} // namespace

EulerConstantResult euler_constant_direct(unsigned k, Variant variant,
                                          std::uint64_t prime_limit) {
  if (k < 2) throw std::domain_error("euler_constant_direct: k must be >= 2");
  if (prime_limit < 3)
    throw std::domain_error("euler_constant_direct: prime limit must be >= 3");
  Kahan logsum;
  for_primes_up_to(prime_limit, [&](std::uint64_t p) {
    logsum.add(log_local_factor(k, variant, p));
  });

  // tail over p > P bounded through the log-series coefficients:
  // exp(sum_{m>=2} |c_m| P(m, P)) - 1
  constexpr unsigned kTailOrder = 40;
  auto coeffs = local_log_coeffs(k, variant, kTailOrder);
  auto excluded = prime_power_sums(prime_limit, kTailOrder);
  double bound = 0;
  for (unsigned m = 2; m <= kTailOrder; ++m) {
    double pz = prime_zeta(double(m)) - excluded[m];
    bound += std::abs(coeffs[m].get_d()) * std::max(pz, 0.0);
  }

  EulerConstantResult r;
  r.k = k;
  r.variant = variant;
  r.method = EulerConstantResult::Method::direct;
  r.prime_limit = prime_limit;
  r.value = std::exp(logsum.value());
  r.tail_estimate = std::expm1(bound);
  return r;
}

EulerConstantResult euler_constant_series(unsigned k, Variant variant,
                                          std::uint64_t p0, unsigned M) {
  if (k < 2) throw std::domain_error("euler_constant_series: k must be >= 2");
  if (p0 < 3) throw std::domain_error("euler_constant_series: p0 must be >= 3");
  if (M < 10) throw std::domain_error("euler_constant_series: M must be >= 10");

  auto coeffs = local_log_coeffs(k, variant, M + 1);
  auto excluded = prime_power_sums(p0, M + 1);
  Kahan logsum;
  for_primes_up_to(p0, [&](std::uint64_t p) {
    logsum.add(log_local_factor(k, variant, p));
  });
  std::vector<double> pz(M + 2, 0.0);
  for (unsigned m = 2; m <= M + 1; ++m)
    pz[m] = std::max(prime_zeta(double(m)) - excluded[m], 0.0);
  for (unsigned m = 2; m <= M; ++m) logsum.add(coeffs[m].get_d() * pz[m]);

  double last_term = std::abs(coeffs[M].get_d()) * pz[M];
  if (last_term > 1e-13)
    throw std::runtime_error(
        "euler_constant_series: series not converged at order M (raise M or p0)");

  EulerConstantResult r;
  r.k = k;
  r.variant = variant;
  r.method = EulerConstantResult::Method::series;
  r.prime_limit = p0;
  r.series_order = M;
  r.value = std::exp(logsum.value());
  r.tail_estimate = std::abs(coeffs[M + 1].get_d()) * pz[M + 1];
  return r;
}

std::pair<double, double> mertens_window(unsigned k, std::uint64_t u,
                                         std::uint64_t v) {
  if (u < 2) throw std::domain_error("mertens_window: need u >= 2");
  if (v <= u) throw std::domain_error("mertens_window: need v > u");
  if (k < 2) throw std::domain_error("mertens_window: k must be >= 2");
  Kahan acc;
  for_primes_up_to(v, [&](std::uint64_t p) {
    if (p > u) acc.add(1.0 / double(p));
  });
  double lhs = (2.0 / k) * acc.value();
  double rhs = (2.0 / k) * std::log(std::log(double(v)) / std::log(double(u)));
  return {lhs, rhs};
}

} // namespace meanomega
