#include <cmath>

#include "doctest.h"
#include "hhb/means.hpp"
#include "support/testutil.hpp"

using namespace hhb;
using testutil::ulp_diff;

TEST_CASE("interval validation") {
  CHECK_THROWS_AS(PositiveInterval(2.0, 2.0), DomainError);
  CHECK_THROWS_AS(PositiveInterval(2.0, 1.0), DomainError);
  CHECK_THROWS_AS(PositiveInterval(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(PositiveInterval(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(PositiveInterval(1.0, INFINITY), DomainError);
  const PositiveInterval iv(1.0, 2.0);
  CHECK(iv.width() == 1.0);
  CHECK(iv.midpoint() == 1.5);
}

TEST_CASE("mean exponent excludes -1 and 0") {
  CHECK_THROWS_AS(MeanExponent(0.0), DomainError);
  CHECK_THROWS_AS(MeanExponent(-1.0), DomainError);
  CHECK_THROWS_AS(MeanExponent(NAN), DomainError);
  CHECK(MeanExponent(0.5).p() == 0.5);
  CHECK(MeanExponent(-2.0).p() == -2.0);
}

TEST_CASE("classic values on (1,2)") {
  const PositiveInterval iv(1.0, 2.0);
  CHECK(arithmetic_mean(iv) == 1.5);
  CHECK(ulp_diff(geometric_mean(iv), std::sqrt(2.0)) <= 1);
  // I(1,2) = 4/e and L_2(1,2) = sqrt(7/3), both independently derivable
  // from the defining formulas.
  CHECK(identric_mean(iv) == doctest::Approx(1.4715177646857693).epsilon(1e-15));
  CHECK(generalized_log_mean(iv, MeanExponent(2.0)) ==
        doctest::Approx(1.5275252316519468).epsilon(1e-15));
}

TEST_CASE("identric mean of (1,e)") {
  // exp((v ln v - u ln u)/(v-u) - 1) at (1, e) = e^(1/(e-1)).
  const PositiveInterval iv(1.0, M_E);
  const double expected = std::exp(1.0 / (M_E - 1.0));
  CHECK(ulp_diff(identric_mean(iv), expected) <= 2);
  CHECK(identric_mean(iv) == doctest::Approx(1.7895723968418336).epsilon(1e-15));
}

TEST_CASE("log-space identric mean survives huge endpoints") {
  // v^v overflows long before v=800; the log-space form must not.
  const PositiveInterval iv(100.0, 800.0);
  const double val = identric_mean(iv);
  CHECK(std::isfinite(val));
  CHECK(val > geometric_mean(iv));
  CHECK(val < arithmetic_mean(iv));
}

TEST_CASE("generalized log mean matches closed powers") {
  const PositiveInterval iv(1.0, 2.0);
  // p=1: (v^2-u^2)/(2(v-u)) = (u+v)/2.
  CHECK(generalized_log_mean(iv, MeanExponent(1.0)) == 1.5);
  // p=3: ((2^4-1)/(4*1))^(1/3) = (15/4)^(1/3).
  CHECK(ulp_diff(generalized_log_mean(iv, MeanExponent(3.0)),
                 std::cbrt(15.0 / 4.0)) <= 2);
  // p=-2: ((2^-1 - 1^-1)/(-1*1))^(-1/2) = (1/2)^(-1/2) = sqrt(2) = G(1,2).
  CHECK(ulp_diff(generalized_log_mean(iv, MeanExponent(-2.0)),
                 std::sqrt(2.0)) <= 2);
}

TEST_CASE("L_1 equals the arithmetic mean to <= 4 ulp everywhere") {
  testutil::Rng rng(2024);
  std::uint64_t worst = 0;
  for (int i = 0; i < 2000; ++i) {
    // adversarial: many near-degenerate widths
    const double u = rng.uniform(1e-3, 1e3);
    const double v =
        i % 2 ? u * (1.0 + rng.uniform(1e-12, 1e-6)) : rng.uniform(u * 1.0001, 2e3);
    if (!(u < v)) continue;
    const PositiveInterval iv(u, v);
    worst = std::max(worst, ulp_diff(generalized_log_mean(iv, MeanExponent(1.0)),
                                     arithmetic_mean(iv)));
  }
  CHECK(worst <= 4);
}

TEST_CASE("mean ordering G < I < A on random intervals") {
  testutil::Rng rng(71);
  for (int i = 0; i < 300; ++i) {
    const PositiveInterval iv = testutil::draw_interval(rng, 0.05, 50.0, 1e-4);
    const double g = geometric_mean(iv);
    const double id = identric_mean(iv);
    const double a = arithmetic_mean(iv);
    CHECK(g < id);
    CHECK(id < a);
  }
}

TEST_CASE("narrow intervals keep full precision in L_p") {
  // The close-endpoint branch must not cancel catastrophically.
  const double u = 3.0;
  const double v = 3.0 * (1.0 + 1e-13);
  const PositiveInterval iv(u, v);
  for (double p : {0.5, 2.0, 3.0, 7.0, -3.0}) {
    const double lp = generalized_log_mean(iv, MeanExponent(p));
    CHECK(lp > u);
    CHECK(lp < v);
  }
}
