#pragma once
// Scalar analytic building blocks: real gamma, real zeta, generalized
// binomial coefficients, principal-branch complex powers.
// All pure functions, safe to call concurrently.

#include <complex>
#include <stdexcept>

namespace meanomega {

// Gamma on (0, 4], relative error <= 1e-13.
// Fixed-coefficient rational approximation; arguments below 1/2 are lifted
// with Gamma(z) = Gamma(z+1)/z so no reflection is needed.
double gamma_real(double z);

// Zeta for s > 1, relative error <= 1e-13 (Euler-Maclaurin; short direct
// sum once the tail is below working precision).
double zeta_real(double s);

// binom(w, a) = w(w-1)...(w-a+1)/a! by the interleaved product, so integer
// inputs stay exact in floating point (binom(3,2) == 3.0 exactly).
double binomial_general(double w, unsigned a);
std::complex<double> binomial_general(std::complex<double> w, unsigned a);

// p^{-s} and friends use the principal branch throughout.
inline std::complex<double> cpow(double base, std::complex<double> s) {
  return std::exp(s * std::log(base));
}

} // namespace meanomega
