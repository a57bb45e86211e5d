#pragma once
// Local Euler-factor algebra at one prime: truncated coefficient sequences,
// Dirichlet convolution and inversion, the tau_z family, the convolution
// cofactor g_k, and the h(s) identity behind the zeta-power factorization.

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "meanomega/rational.hpp"
#include "meanomega/special.hpp"

namespace meanomega {

// Coefficients f(p^0..p^A) of a multiplicative function at one prime.
template <class T>
struct LocalSeries {
  std::vector<T> c;

  unsigned order() const { return unsigned(c.size()) - 1; }
  static LocalSeries unit(unsigned A) {          // the convolution identity
    LocalSeries s;
    s.c.assign(A + 1, T(0));
    s.c[0] = T(1);
    return s;
  }
};

// c[g] = sum_{i+j=g} a[i] b[j]
template <class T>
LocalSeries<T> local_convolve(const LocalSeries<T>& a, const LocalSeries<T>& b) {
  if (a.c.size() != b.c.size())
    throw std::invalid_argument("local_convolve: truncation orders differ");
  LocalSeries<T> out;
  out.c.assign(a.c.size(), T(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; i + j < a.c.size(); ++j)
      out.c[i + j] += a.c[i] * b.c[j];
  return out;
}

// forward substitution; needs a[0] = 1
template <class T>
LocalSeries<T> local_invert(const LocalSeries<T>& a) {
  if (!(a.c.at(0) == T(1)))
    throw std::invalid_argument("local_invert: leading coefficient must be 1");
  LocalSeries<T> b;
  b.c.assign(a.c.size(), T(0));
  b.c[0] = T(1);
  for (std::size_t g = 1; g < a.c.size(); ++g) {
    T s = T(0);
    for (std::size_t i = 1; i <= g; ++i) s += a.c[i] * b.c[g - i];
    b.c[g] = -s;
  }
  return b;
}

/* --- the function families in scope --- */

// tau_z(p^a) = binom(z+a-1, a)
double tau_z_pp(double z, unsigned a);
std::complex<double> tau_z_pp(std::complex<double> z, unsigned a);

// binom(w, a) over exact rationals
Rational binomial_rational(const Rational& w, unsigned a);
Rational tau_z_pp_exact(const Rational& z, unsigned a);

LocalSeries<double> tau_z_local(double z, unsigned A);
LocalSeries<double> dkw_local(unsigned k, unsigned A);          // (a+1)/k
LocalSeries<Rational> dkw_local_exact(unsigned k, unsigned A);
LocalSeries<Rational> tau_z_local_exact(const Rational& z, unsigned A);

// g_k = tau_{-2/k} * D_{k,omega}; supported away from p^1 by construction
Rational gk_pp_exact(unsigned k, unsigned a);
double gk_pp(unsigned k, unsigned a);
double gk_value(unsigned k, std::uint64_t n);  // multiplicative assembly

// named coefficient rule, |rule(p,a)| <= (a+1)^2 for everything in scope
struct MultiplicativeSpec {
  std::string name;
  std::function<std::complex<double>(std::uint64_t p, unsigned a)> rule;
};

MultiplicativeSpec spec_dkw(unsigned k);
MultiplicativeSpec spec_tau(double z);
MultiplicativeSpec spec_gk(unsigned k);

// 1 + sum_{a>=1} rule(p,a) p^{-as}, truncated once the polynomial-geometric
// tail bound drops below 1e-13.  max_order caps the truncation; small p at
// sigma near 1/2 need a higher cap than the default.
std::complex<double> local_factor_value(const MultiplicativeSpec& spec,
                                        std::uint64_t p, std::complex<double> s,
                                        unsigned max_order = 40);

// closed form 1 + (2p^s - 1)/(k (p^s - 1)^2)
std::complex<double> dkw_factor_closed(unsigned k, std::uint64_t p,
                                       std::complex<double> s);

// h(s) = (1-p^{-s})^{2/k} (k p^{2s} - 2(k-1) p^s + k-1) - k (p^s - 1)^2,
// evaluated in extended precision to survive the large-p cancellation.
std::complex<double> h_value(unsigned k, std::uint64_t p, std::complex<double> s);

// sum_{n<=N} |g_k(n)| n^{-sigma}
double lgk_abs_partial(unsigned k, double sigma, std::uint64_t N);

} // namespace meanomega
