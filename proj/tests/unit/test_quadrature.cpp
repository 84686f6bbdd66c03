#include <doctest.h>

#include <cmath>
#include <numbers>

#include "common/error.hpp"
#include "specfun/bessel.hpp"
#include "specfun/constants.hpp"
#include "specfun/quadrature.hpp"

using namespace salpeter;
using std::numbers::pi;

TEST_SUITE("quadrature") {

TEST_CASE("polynomials and smooth integrands") {
  specfun::QuadratureSpec spec;
  CHECK(std::abs(specfun::integrate([](double x) { return x * x * x; }, 0, 2, spec).value - 4.0) <
        1e-14);
  CHECK(std::abs(specfun::integrate([](double x) { return std::sin(x); }, 0, pi, spec).value -
                 2.0) < 1e-14);
}

TEST_CASE("integrable endpoint singularity") {
  specfun::QuadratureSpec spec;
  spec.max_subdivisions = 2000;
  const auto r = specfun::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0, 1, spec);
  CHECK(std::abs(r.value - 2.0) < 1e-10);
  const auto l = specfun::integrate([](double x) { return std::log(x); }, 0, 1, spec);
  CHECK(std::abs(l.value + 1.0) < 1e-10);
}

TEST_CASE("semi-infinite decaying integrands") {
  specfun::QuadratureSpec spec;
  const auto e = specfun::integrate_to_infinity([](double x) { return std::exp(-x); }, 0, 1, spec);
  CHECK(std::abs(e.value - 1.0) < 1e-13);
  const auto g = specfun::integrate_to_infinity(
      [](double x) { return std::exp(-x * x); }, 0, 1, spec);
  CHECK(std::abs(g.value - std::sqrt(pi) / 2) < 1e-13);
}

TEST_CASE("Bessel integral anchors") {
  // int x K1 = pi/2, int K0 = pi/2, int K0^2 = pi^2/4.
  CHECK(std::abs(specfun::k1_power_integral(1.0) - pi / 2) < 1e-10);
  CHECK(std::abs(specfun::k0_power_integral(1.0) - pi / 2) < 1e-10);
  CHECK(std::abs(specfun::k0_power_integral(2.0) - pi * pi / 4) < 1e-10);
}

TEST_CASE("unreachable tolerance reports non-convergence") {
  specfun::QuadratureSpec spec;
  spec.max_subdivisions = 5;
  CHECK_THROWS_AS(specfun::integrate([](double x) { return std::sin(1.0 / x) / x; }, 1e-6, 1,
                                     spec),
                  ConvergenceError);
}

TEST_CASE("invalid specs are rejected") {
  specfun::QuadratureSpec spec;
  spec.abs_tol = -1;
  CHECK_THROWS_AS(spec.validate(), InvalidArgument);
}

}
