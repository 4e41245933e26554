#include <doctest.h>

#include "bessel_oracle.hpp"
#include "dirac/bessel.hpp"

#include <cmath>
#include <random>

using namespace dirac;

TEST_CASE("oracle reproduces tabulated values") {
  // 30-digit reference values; the oracle must reproduce them before it can judge anything.
  CHECK(std::abs(oracle::bessel_j(0, 1.0) - 0.765197686557966551449717526103) < 1e-15);
  CHECK(std::abs(oracle::bessel_j(1, 1.0) - 0.440050585744933515959682203719) < 1e-15);
  CHECK(std::abs(oracle::bessel_j(0, 50.0) - 0.0558123276692518150047504785294) < 1e-15);
  CHECK(std::abs(oracle::bessel_j(1, 50.0) + 0.0975118281251751376614589538737) < 1e-15);
}

TEST_CASE("j0 and j1 special values") {
  CHECK(bessel::j0(0.0) == 1.0);
  CHECK(bessel::j1(0.0) == 0.0);
  CHECK(std::abs(bessel::j0(1.0) - 0.7651976866) < 1e-10);
  CHECK(std::abs(bessel::j1(1.0) - 0.4400505857) < 1e-10);
  CHECK(std::abs(bessel::j1(1e-8) / 1e-8 - 0.5) < 1e-12);
}

TEST_CASE("first zero of j0") {
  // Bisection on the oracle, then evaluate the implementation there.
  double lo = 2.0, hi = 3.0;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    (oracle::bessel_j(0, mid) > 0.0 ? lo : hi) = mid;
  }
  CHECK(std::abs(lo - 2.40482555769577276862) < 1e-14);
  CHECK(std::abs(bessel::j0(2.4048255577)) < 1e-9);
}

TEST_CASE("j1_over_x is continuous at the origin") {
  CHECK(bessel::j1_over_x(0.0) == 0.5);
  CHECK(std::abs(bessel::j1_over_x(1e-6) - 0.5) < 1e-12);
  CHECK(std::abs(bessel::j1_over_x(1.0) - 0.4400505857) < 1e-10);
  // 1/2 - x^2/16 + x^4/384
  for (const double x : {1e-4, 1e-3, 1e-2}) {
    CHECK(std::abs(bessel::j1_over_x(x) - (0.5 - x * x / 16.0 + x * x * x * x / 384.0)) < 1e-15);
  }
}

TEST_CASE("negative arguments are rejected") {
  CHECK_THROWS_AS(bessel::j0(-1.0), std::domain_error);
  CHECK_THROWS_AS(bessel::j1(-1e-3), std::domain_error);
  CHECK_THROWS_AS(bessel::j1_over_x(-2.0), std::domain_error);
}

TEST_CASE("agreement with the oracle on [0, 200]") {
  double worst = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double x = 0.1 * i;
    worst = std::max(worst, std::abs(bessel::j0(x) - oracle::bessel_j(0, x)));
    worst = std::max(worst, std::abs(bessel::j1(x) - oracle::bessel_j(1, x)));
  }
  CHECK(worst < 1e-10);
  CHECK(bessel::j0_eval(150.0).estimated_abs_error <= 1e-10);
  CHECK(bessel::j1_eval(3.0).estimated_abs_error <= 1e-10);
}

TEST_CASE("recurrence J0 + J2 = 2 J1 / x") {
  for (int i = 0; i <= 500; ++i) {
    const double x = 0.1 + i * (50.0 - 0.1) / 500.0;
    const double j2 = oracle::bessel_j(2, x);
    CHECK(std::abs(bessel::j0(x) + j2 - 2.0 * bessel::j1(x) / x) < 1e-9);
  }
}

TEST_CASE("derivative identity J0' = -J1") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> u(0.1, 50.0);
  const double h = 1e-5;
  for (int i = 0; i < 100; ++i) {
    const double x = u(rng);
    const double derivative = (bessel::j0(x + h) - bessel::j0(x - h)) / (2.0 * h);
    CHECK(std::abs(derivative + bessel::j1(x)) < 1e-7);
  }
}

TEST_CASE("series and recurrence branches agree around the switch point") {
  const double s = bessel::series_switch;
  for (int i = -20; i <= 20; ++i) {
    const double x = s + 0.05 * i;
    const double series0 = bessel::detail::series(x, 0).value;
    const double series1 = x * bessel::detail::series(x, 1).value;
    double m0 = 0, m1 = 0, err = 0;
    bessel::detail::miller(x, m0, m1, err);
    CHECK(std::abs(series0 - m0) < 1e-10);
    CHECK(std::abs(series1 - m1) < 1e-10);
  }
}

TEST_CASE("templated on the scalar type") {
  CHECK(std::abs(bessel::j0(1.0f) - 0.76519769f) < 1e-6f);
  CHECK(std::abs(static_cast<double>(bessel::j1(1.0L)) - 0.440050585744933516) < 1e-15);
}
