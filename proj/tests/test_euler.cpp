#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "meanomega/euler_product.hpp"
#include "meanomega/sieve.hpp"

using namespace meanomega;

/* --- prime zeta --- */

TEST_CASE("prime zeta reference values") {
  // 38-digit references computed independently
  CHECK(prime_zeta(2.0) ==
        doctest::Approx(0.45224742004106549850654336483224793417).epsilon(5e-14));
  CHECK(prime_zeta(3.0) ==
        doctest::Approx(0.17476263929944353642311331466570670098).epsilon(5e-14));
}

TEST_CASE("prime zeta at large s equals the short direct sum") {
  double direct = 0;
  for (std::uint64_t p : primes_up_to(100)) direct += std::pow(double(p), -20.0);
  CHECK(prime_zeta(20.0) == doctest::Approx(direct).epsilon(1e-15));
}

TEST_CASE("excluding small primes subtracts their terms") {
  double full = prime_zeta(2.0);
  double tail = prime_zeta(2.0, 3);
  CHECK(tail == doctest::Approx(full - 0.25 - 1.0 / 9.0).epsilon(1e-13));
  double tail100 = prime_zeta(2.0, 100);
  double removed = 0;
  for (std::uint64_t p : primes_up_to(100)) removed += 1.0 / double(p * p);
  CHECK(tail100 == doctest::Approx(full - removed).epsilon(1e-13));
}

TEST_CASE("prime zeta rejects s <= 1") {
  CHECK_THROWS_AS(prime_zeta(1.0), std::domain_error);
  CHECK_THROWS_AS(prime_zeta(0.5), std::domain_error);
}

/* --- log-factor coefficients --- */

TEST_CASE("the linear coefficient cancels for the convergent variant") {
  for (unsigned k = 2; k <= 16; ++k) {
    auto c = local_log_coeffs(k, Variant::thm3, 6);
    CHECK(c[1] == Rational(0));
  }
}

TEST_CASE("the variant with the extra denominator keeps a linear term") {
  for (unsigned k : {2u, 3u, 5u}) {
    auto c = local_log_coeffs(k, Variant::thm1, 6);
    CHECK(c[1] == make_rational(-2, int(k)));
  }
}

TEST_CASE("quadratic and cubic coefficients") {
  auto c2 = local_log_coeffs(2, Variant::thm3, 4);
  CHECK(c2[2] == make_rational(1, 2));
  CHECK(c2[3] == make_rational(1, 2));
  auto c3 = local_log_coeffs(3, Variant::thm3, 4);
  CHECK(c3[2] == make_rational(4, 9));
  CHECK(c3[3] == make_rational(44, 81));
  auto c4 = local_log_coeffs(4, Variant::thm3, 4);
  CHECK(c4[2] == make_rational(3, 8));
  CHECK(c4[3] == make_rational(1, 2));
  // general law c[2] = 2(k-1)/k^2
  for (unsigned k = 2; k <= 10; ++k) {
    auto c = local_log_coeffs(k, Variant::thm3, 3);
    CHECK(c[2] == make_rational(2 * (int(k) - 1), int(k) * int(k)));
  }
}

/* --- the constant, both routes --- */

TEST_CASE("two-prime truncation reproduces the hand product 65/48") {
  auto r = euler_constant_direct(2, Variant::thm3, 3);
  CHECK(r.value == doctest::Approx(65.0 / 48.0).epsilon(1e-14));
  CHECK(r.prime_limit == 3);
  CHECK(r.series_order == 0);
}

TEST_CASE("direct product at a million primes bound") {
  auto r = euler_constant_direct(2, Variant::thm3, 1000000);
  CHECK(r.value == doctest::Approx(1.427656487044635).epsilon(1e-12));
}

TEST_CASE("series values against independent references") {
  struct Row { unsigned k; double want; };
  for (auto [k, want] : {Row{2, 1.42765653542483958759740733961590460767},
                         Row{3, 1.43008919806791108},
                         Row{4, 1.38279379904985359},
                         Row{5, 1.33621501902903928},
                         Row{8, 1.23878492651022847}}) {
    auto r = euler_constant_series(k, Variant::thm3, 100, 60);
    CAPTURE(k);
    CHECK(r.value == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("direct and series routes agree") {
  for (unsigned k : {2u, 5u}) {
    auto d = euler_constant_direct(k, Variant::thm3, 1000000);
    auto s = euler_constant_series(k, Variant::thm3, 100, 60);
    CHECK(std::abs(d.value - s.value) < 1e-6);
    // the direct result's tail estimate must cover the actual gap
    CHECK(d.tail_estimate >= 0.5 * std::abs(d.value - s.value) / s.value);
    CHECK(d.tail_estimate < 1e-4);
  }
}

TEST_CASE("series value plateaus under a higher truncation order") {
  auto a = euler_constant_series(5, Variant::thm3, 100, 60);
  auto b = euler_constant_series(5, Variant::thm3, 100, 70);
  CHECK(std::abs(a.value - b.value) <= 1e-10);
}

TEST_CASE("series route refuses an unconverged truncation") {
  CHECK_THROWS_AS(euler_constant_series(2, Variant::thm3, 3, 10),
                  std::runtime_error);
}

TEST_CASE("each local factor approaches 1 as k grows") {
  auto factor_at = [](unsigned k, double p) {
    return std::pow(1.0 - 1.0 / p, 2.0 / k) *
           (1.0 + (2.0 * p - 1.0) / (k * (p - 1.0) * (p - 1.0)));
  };
  for (double p : {2.0, 7.0, 101.0}) {
    double prev = std::abs(factor_at(2, p) - 1.0);
    for (unsigned k : {4u, 8u, 16u, 32u}) {
      double cur = std::abs(factor_at(k, p) - 1.0);
      CHECK(cur < prev);
      prev = cur;
    }
    CHECK(prev < 0.05);  // k = 32 already close to 1
  }
}

TEST_CASE("the variant product decays as its prime bound grows") {
  // the uncancelled -2/(kp) log term drags the partial products down
  auto a = euler_constant_direct(2, Variant::thm1, 10000);
  auto b = euler_constant_direct(2, Variant::thm1, 1000000);
  CHECK(b.value < a.value);
  CHECK(b.value > 0.0);
  CHECK(b.value == doctest::Approx(0.09629421435).epsilon(1e-9));
}

TEST_CASE("variant names parse and print") {
  CHECK(variant_name(Variant::thm3) == std::string("thm3"));
  CHECK(variant_name(Variant::thm1) == std::string("thm1"));
  CHECK(parse_variant("thm3") == Variant::thm3);
  CHECK(parse_variant("thm1") == Variant::thm1);
  CHECK_THROWS_AS(parse_variant("bogus"), std::invalid_argument);
}

/* --- Mertens-style window check --- */

TEST_CASE("reciprocal prime window tracks log log growth") {
  auto [lhs, rhs] = mertens_window(2, 1000, 1000000);
  CHECK(lhs > 0);
  CHECK(std::abs(lhs - rhs) < 0.05);
  CHECK_THROWS_AS(mertens_window(2, 1, 100), std::domain_error);
  CHECK_THROWS_AS(mertens_window(2, 100, 100), std::domain_error);
  CHECK_THROWS_AS(mertens_window(1, 100, 1000), std::domain_error);
}
