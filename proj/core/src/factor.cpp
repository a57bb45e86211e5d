#include "meanomega/factor.hpp"

#include <stdexcept>

#include "meanomega/special.hpp"

namespace meanomega {

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factorize: n must be positive");
  Factorization f;
  f.n = n;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p) continue;
    unsigned a = 0;
    do {
      n /= p;
      ++a;
    } while (n % p == 0);
    f.factors.emplace_back(p, a);
  }
  if (n > 1) f.factors.emplace_back(n, 1);
  return f;
}

Rational dkw_value(unsigned k, std::uint64_t n) {
  if (k < 2) throw std::domain_error("dkw_value: k must be >= 2");
  Factorization f = factorize(n);
  BigInt num = 1, den = 1;
  for (auto [p, a] : f.factors) {
    num *= a + 1;
    den *= k;
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

double tau_z_value(double z, std::uint64_t n) {
  Factorization f = factorize(n);
  double v = 1.0;
  for (auto [p, a] : f.factors) v *= binomial_general(z + a - 1, a);
  return v;
}

} // namespace meanomega
