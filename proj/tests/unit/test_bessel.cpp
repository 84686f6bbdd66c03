#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <random>

#include "common/error.hpp"
#include "specfun/bessel.hpp"

using namespace salpeter;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

double ref_k(int nu, double x) {
  return static_cast<double>(boost::math::cyl_bessel_k(nu, Big(x)));
}

double ref_k_scaled(int nu, double x) {
  const Big bx(x);
  return static_cast<double>(boost::math::cyl_bessel_k(nu, bx) * exp(bx));
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_SUITE("bessel") {

TEST_CASE("K0 and K1 match 50-digit reference across both branches") {
  for (double x : {1e-12, 1e-6, 1e-3, 0.1, 0.5, 1.0, 1.5, 1.999, 2.0, 2.001, 3.0, 5.0, 10.0,
                   25.0, 80.0, 300.0, 700.0}) {
    CAPTURE(x);
    CHECK(rel(specfun::bessel_k0(x), ref_k(0, x)) < 5e-15);
    CHECK(rel(specfun::bessel_k1(x), ref_k(1, x)) < 5e-15);
  }
}

TEST_CASE("scaled forms reach far beyond underflow") {
  for (double x : {0.01, 1.0, 2.5, 50.0, 800.0, 1e4, 1e6}) {
    CAPTURE(x);
    CHECK(rel(specfun::bessel_k0_scaled(x), ref_k_scaled(0, x)) < 5e-15);
    CHECK(rel(specfun::bessel_k1_scaled(x), ref_k_scaled(1, x)) < 5e-15);
  }
}

TEST_CASE("random arguments against reference") {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> logx(-8.0, 2.5);
  for (int i = 0; i < 200; ++i) {
    const double x = std::pow(10.0, logx(rng));
    CAPTURE(x);
    CHECK(rel(specfun::bessel_k0(x), ref_k(0, x)) < 5e-15);
    CHECK(rel(specfun::bessel_k1(x), ref_k(1, x)) < 5e-15);
  }
}

TEST_CASE("x K1(x) tends to 1 at the origin") {
  CHECK(specfun::x_bessel_k1(0.0) == 1.0);
  CHECK(std::abs(specfun::x_bessel_k1(1e-10) - 1.0) < 1e-15);
  CHECK(rel(specfun::x_bessel_k1(0.7), 0.7 * ref_k(1, 0.7)) < 5e-15);
}

TEST_CASE("Wronskian I0 K1 + I1 K0 = 1/x") {
  for (double x : {0.05, 0.9, 2.0, 4.0, 12.0}) {
    const double i0 = boost::math::cyl_bessel_i(0, x);
    const double i1 = boost::math::cyl_bessel_i(1, x);
    const double w = i0 * specfun::bessel_k1(x) + i1 * specfun::bessel_k0(x);
    CHECK(rel(w, 1.0 / x) < 1e-14);
  }
}

TEST_CASE("ordering and monotonicity") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(1e-3, 40.0);
  for (int i = 0; i < 500; ++i) {
    const double x = u(rng);
    const double y = x * (1.0 + 1e-3);
    CHECK(specfun::bessel_k0(x) < specfun::bessel_k1(x));
    CHECK(specfun::bessel_k0(y) < specfun::bessel_k0(x));
    CHECK(specfun::bessel_k1(y) < specfun::bessel_k1(x));
  }
}

TEST_CASE("non-positive arguments are domain errors") {
  CHECK_THROWS_AS(specfun::bessel_k0(0.0), DomainError);
  CHECK_THROWS_AS(specfun::bessel_k1(-1.0), DomainError);
  CHECK_THROWS_AS(specfun::bessel_k0_scaled(-2.0), DomainError);
  CHECK_THROWS_AS(specfun::bessel_k0(std::nan("")), DomainError);
}

}
