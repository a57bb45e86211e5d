#include "meanomega/local_series.hpp"

#include <cmath>

#include "meanomega/factor.hpp"
#include "meanomega/util.hpp"

namespace meanomega {

double tau_z_pp(double z, unsigned a) { return binomial_general(z + a - 1.0, a); }

std::complex<double> tau_z_pp(std::complex<double> z, unsigned a) {
  return binomial_general(z + double(a) - 1.0, a);
}

Rational binomial_rational(const Rational& w, unsigned a) {
  Rational acc(1);
  for (unsigned i = 0; i < a; ++i) {
    acc *= w - Rational(i);
    acc /= Rational(i + 1);
  }
  acc.canonicalize();
  return acc;
}

Rational tau_z_pp_exact(const Rational& z, unsigned a) {
  return binomial_rational(z + Rational(a) - 1, a);
}

LocalSeries<double> tau_z_local(double z, unsigned A) {
  LocalSeries<double> s;
  s.c.resize(A + 1);
  for (unsigned a = 0; a <= A; ++a) s.c[a] = tau_z_pp(z, a);
  return s;
}

LocalSeries<double> dkw_local(unsigned k, unsigned A) {
  if (k < 2) throw std::domain_error("dkw_local: k must be >= 2");
  LocalSeries<double> s;
  s.c.resize(A + 1);
  s.c[0] = 1.0;
  for (unsigned a = 1; a <= A; ++a) s.c[a] = double(a + 1) / k;
  return s;
}

LocalSeries<Rational> dkw_local_exact(unsigned k, unsigned A) {
  if (k < 2) throw std::domain_error("dkw_local_exact: k must be >= 2");
  LocalSeries<Rational> s;
  s.c.resize(A + 1);
  s.c[0] = 1;
  for (unsigned a = 1; a <= A; ++a) {
    s.c[a] = Rational(a + 1, k);
    s.c[a].canonicalize();
  }
  return s;
}

LocalSeries<Rational> tau_z_local_exact(const Rational& z, unsigned A) {
  LocalSeries<Rational> s;
  s.c.resize(A + 1);
  for (unsigned a = 0; a <= A; ++a) s.c[a] = tau_z_pp_exact(z, a);
  return s;
}

Rational gk_pp_exact(unsigned k, unsigned a) {
  if (k < 2) throw std::domain_error("gk_pp_exact: k must be >= 2");
  Rational mz(-2, int(k));
  mz.canonicalize();
  auto conv = local_convolve(tau_z_local_exact(mz, a), dkw_local_exact(k, a));
  return conv.c[a];
}

double gk_pp(unsigned k, unsigned a) { return gk_pp_exact(k, a).get_d(); }

double gk_value(unsigned k, std::uint64_t n) {
  double v = 1.0;
  for (auto [p, a] : factorize(n).factors) v *= gk_pp(k, a);
  return v;
}

MultiplicativeSpec spec_dkw(unsigned k) {
  if (k < 2) throw std::domain_error("spec_dkw: k must be >= 2");
  return {"dkw_k" + std::to_string(k),
          [k](std::uint64_t, unsigned a) -> std::complex<double> {
            return a == 0 ? 1.0 : double(a + 1) / k;
          }};
}

MultiplicativeSpec spec_tau(double z) {
  return {"tau_z", [z](std::uint64_t, unsigned a) -> std::complex<double> {
            return tau_z_pp(z, a);
          }};
}

MultiplicativeSpec spec_gk(unsigned k) {
  if (k < 2) throw std::domain_error("spec_gk: k must be >= 2");
  return {"g_k" + std::to_string(k),
          [k](std::uint64_t, unsigned a) -> std::complex<double> {
            return gk_pp(k, a);
          }};
}

std::complex<double> local_factor_value(const MultiplicativeSpec& spec,
                                        std::uint64_t p, std::complex<double> s,
                                        unsigned max_order) {
  const double sigma = s.real();
  if (!(sigma > 0.5))
    throw std::domain_error("local_factor_value: need Re s > 1/2");
  const double t = std::pow(double(p), -sigma);

  // smallest A whose tail bound sum_{a>A} (a+1)^2 t^a clears 1e-13,
  // found by suffix-summing the bound from the far end
  constexpr unsigned kHardMax = 2000;  // (a+1)^2 t^a is ~1e-290 here for t<=0.71
  unsigned A = 1;
  double suffix = 0;
  for (unsigned a = kHardMax; a >= 1; --a) {
    suffix += double(a + 1) * (a + 1) * std::pow(t, double(a));
    if (suffix >= 1e-13) {  // truncating below order a is not certified
      A = a;
      break;
    }
  }
  if (A > max_order)
    throw std::runtime_error(
        "local_factor_value: tail bound needs order " + std::to_string(A) +
        " > max_order " + std::to_string(max_order) + " at p=" + std::to_string(p));

  std::complex<double> acc = 1.0;
  for (unsigned a = 1; a <= A; ++a)
    acc += spec.rule(p, a) * cpow(double(p), -double(a) * s);
  return acc;
}

std::complex<double> dkw_factor_closed(unsigned k, std::uint64_t p,
                                       std::complex<double> s) {
  std::complex<double> ps = cpow(double(p), s);
  std::complex<double> q = ps - 1.0;
  return 1.0 + (2.0 * ps - 1.0) / (double(k) * q * q);
}

std::complex<double> h_value(unsigned k, std::uint64_t p,
                             std::complex<double> s) {
  if (k < 2) throw std::domain_error("h_value: k must be >= 2");
  if (!(s.real() > 0)) throw std::domain_error("h_value: need Re s > 0");
  using C = std::complex<long double>;
  const C sl(s.real(), s.imag());
  const long double lp = std::log((long double)(p));
  const C ps = std::exp(sl * lp);
  const C ips = std::exp(-sl * lp);
  const long double kk = (long double)(k);
  // principal branch throughout
  C head = std::pow(C(1) - ips, (long double)(2) / kk);
  C poly = kk * ps * ps - 2 * (kk - 1) * ps + (kk - 1);
  C tail = kk * (ps - C(1)) * (ps - C(1));
  C h = head * poly - tail;
  return {double(h.real()), double(h.imag())};
}

double lgk_abs_partial(unsigned k, double sigma, std::uint64_t N) {
  if (!(sigma > 0.5))
    throw std::domain_error("lgk_abs_partial: need sigma > 1/2");
  // cache g_k(p^a) once; exponents for n <= N stay below 64
  double table[64];
  table[0] = 1.0;
  for (unsigned a = 1; a < 64; ++a) table[a] = gk_pp(k, a);
  Kahan acc;
  for (std::uint64_t n = 1; n <= N; ++n) {
    double g = 1.0;
    for (auto [p, a] : factorize(n).factors) g *= table[a];
    if (g != 0.0) acc.add(std::abs(g) * std::pow(double(n), -sigma));
  }
  return acc.value();
}

} // namespace meanomega
