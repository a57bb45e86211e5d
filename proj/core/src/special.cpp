#include "meanomega/special.hpp"

#include <array>
#include <cmath>

namespace meanomega {

/* --- gamma --- */

// Lanczos, g = 7, 9 terms. Certified to ~1e-15 relative on the positive
// real axis, far inside the 1e-13 contract on (0, 4].
static constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

static double lanczos_half_up(double z) {
  // valid for z >= 0.5
  double x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z - 1 + i);
  double t = z + 6.5;  // z + g - 0.5
  return std::sqrt(2 * M_PI) * std::pow(t, z - 0.5) * std::exp(-t) * x;
}

double gamma_real(double z) {
  if (!(z > 0))
    throw std::domain_error("gamma_real: argument must be positive");
  if (z < 0.5) return lanczos_half_up(z + 1) / z;
  return lanczos_half_up(z);
}

/* --- zeta --- */

// B_{2k}/(2k)! for k = 1..12, exact rationals rounded once.
static constexpr std::array<double, 12> kBernoulliOverFact = {
    1.0 / 12,
    -1.0 / 720,
    1.0 / 30240,
    -1.0 / 1209600,
    1.0 / 47900160,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
    77683.0 / 14101100039391805440000.0,
    -236364091.0 / 1693824136731743669452800000.0,
};

double zeta_real(double s) {
  if (!(s > 1))
    throw std::domain_error("zeta_real: argument must exceed 1");
  if (s >= 42) {
    // 6^-42 < 1e-32: four terms already exceed the precision target.
    return 1.0 + std::pow(2.0, -s) + std::pow(3.0, -s) + std::pow(4.0, -s) +
           std::pow(5.0, -s);
  }
  // Euler-Maclaurin at N = 24: remainder below 1e-16 relative for s in (1, 42).
  constexpr int N = 24;
  double sum = 0;
  for (int n = N - 1; n >= 1; --n) sum += std::pow(n, -s);
  double ns = std::pow(N, -s);
  sum += ns * N / (s - 1) + ns / 2;
  // correction terms: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
  double rising = s;           // s(s+1)...(s+2k-2), updated per k
  double npow = ns / N;        // N^{-s-2k+1}, updated per k
  for (int k = 0; k < 12; ++k) {
    sum += kBernoulliOverFact[k] * rising * npow;
    rising *= (s + 2 * k + 1) * (s + 2 * k + 2);
    npow /= double(N) * N;
  }
  return sum;
}

/* --- generalized binomial --- */

double binomial_general(double w, unsigned a) {
  double acc = 1.0;
  for (unsigned i = 0; i < a; ++i) {
    acc *= (w - i);
    acc /= (i + 1);  // separate step keeps integer intermediates exact
  }
  return acc;
}

std::complex<double> binomial_general(std::complex<double> w, unsigned a) {
  std::complex<double> acc = 1.0;
  for (unsigned i = 0; i < a; ++i) {
    acc *= (w - double(i));
    acc /= double(i + 1);
  }
  return acc;
}

} // namespace meanomega
