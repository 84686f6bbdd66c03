#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

#include "bounds/bounds.hpp"
#include "common/error.hpp"
#include "potentials/norms.hpp"
#include "potentials/table.hpp"
#include "solver/solver.hpp"
#include "specfun/constants.hpp"

using namespace salpeter;
using potentials::Potential;

namespace {

Potential bowl() {
  // r^2 - 1 sampled on [0, 10]; bounded below by -1, held at 99 beyond.
  std::vector<double> r, v;
  for (int i = 0; i <= 100; ++i) {
    r.push_back(0.1 * i);
    v.push_back(r.back() * r.back() - 1.0);
  }
  return Potential::tabulated(std::make_shared<potentials::Table>(r, v), 1.0);
}

Potential yukawa() {
  return Potential::tabulated(std::make_shared<potentials::Table>(
      potentials::Table::load(std::string(SALPETER_TEST_DATA) + "/yukawa.txt")));
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("q = 1 reproduces the trivial bound alpha m - sup V^-") {
  for (auto v : {Potential::exponential(1.5, 0.8), Potential::power_exponential(3, 1.2)}) {
    for (double m : {0.5, 2.0}) {
      const double trivial = 2.0 * m - potentials::negative_part_sup(v);
      CHECK(std::abs(bounds::mass_bound_3d(v, m, 2.0, 1.0) - trivial) < 1e-8);
      CHECK(std::abs(bounds::mass_bound_1d(v, m, 2.0, 1.0) - trivial) < 1e-8);
      CHECK(std::abs(bounds::bound_report_3d(v, m, 2.0, 1.2).trivial_bound - trivial) < 1e-12);
    }
  }
}

TEST_CASE("the bound equals its general form") {
  const auto v = Potential::exponential(2, 1);
  const double q = 1.3;
  const auto r = bounds::bound_report_3d(v, 1.5, 2.0, q);
  CHECK(std::abs(r.mass_bound - bounds::master_bound(3, q, 1.5, 2.0, r.potential_norm)) < 1e-12);
  const double direct = 2.0 * 1.5 - std::pow(specfun::combined_constant(q), 3) *
                                        specfun::green_constant_3d(q) *
                                        std::pow(1.5, 3 - 3 / q) * r.potential_norm;
  CHECK(std::abs(r.mass_bound - direct) < 1e-12);
  CHECK(r.binding_bound == doctest::Approx(r.mass_bound - 3.0));
}

TEST_CASE("optimized bound dominates every grid exponent") {
  const auto v = Potential::exponential(3, 1);
  const auto best = bounds::optimize_mass_bound_3d(v, 1.0, 2.0);
  for (double q = 1.0; q < 1.5; q += 0.02) {
    CHECK(best.mass_bound >= bounds::mass_bound_3d(v, 1.0, 2.0, q) - 1e-12);
  }
}

TEST_CASE("bounds lie below the numerical ground state") {
  for (double g : {0.5, 2.0, 8.0}) {
    for (auto v : {Potential::exponential(g, 1), Potential::power_exponential(g, 1)}) {
      solver::SolverConfig c;
      c.mass = 1.0;
      const double m3 = solver::ground_state_3d_swave(v, c).mass;
      // Guaranteed for M >= 0; otherwise only |M| is bounded.
      CHECK(bounds::optimize_mass_bound_3d(v, 1.0, 2.0).mass_bound <= std::abs(m3));
      if (m3 >= 0.0) CHECK(bounds::optimize_mass_bound_3d(v, 1.0, 2.0).mass_bound <= m3);
      c.dimension = 1;
      const double m1 = solver::ground_state_1d(v, c).mass;
      CHECK(bounds::optimize_mass_bound_1d(v, 1.0, 2.0).mass_bound <= std::abs(m1));
      if (m1 >= 0.0) CHECK(bounds::optimize_mass_bound_1d(v, 1.0, 2.0).mass_bound <= m1);
    }
  }
}

TEST_CASE("bounds decrease with the coupling") {
  double prev3 = 1e300, prev1 = 1e300;
  for (double g = 0.25; g < 20; g *= 1.7) {
    const auto v = Potential::singular(g, 1);
    const double b3 = bounds::optimize_mass_bound_3d(v, 1.0, 2.0).mass_bound;
    const double b1 = bounds::optimize_mass_bound_1d(Potential::exponential(g, 1), 1.0, 2.0).mass_bound;
    CHECK(b3 < prev3);
    CHECK(b1 < prev1);
    prev3 = b3;
    prev1 = b1;
  }
}

TEST_CASE("critical coupling bound depends on beta = m R only") {
  for (auto v : {Potential::exponential(1, 1), Potential::singular(1, 1)}) {
    const auto a = bounds::critical_coupling_bound_3d(v, 1.0, 2.0);
    const auto b = bounds::critical_coupling_bound_3d(v.with_range(0.5), 2.0, 2.0);
    CHECK(std::abs(a.value / b.value - 1.0) < 1e-8);
    // At the bound coupling the optimized mass bound vanishes.
    const auto r = bounds::bound_report_3d(v.with_coupling(a.value), 1.0, 2.0, a.q);
    CHECK(std::abs(r.mass_bound) < 1e-9);
  }
  CHECK(bounds::critical_coupling_bound_3d(Potential::zero(), 1.0, 2.0).unbounded);
}

TEST_CASE("Yukawa tail of the table is out of class") {
  CHECK_THROWS_WITH_AS(bounds::optimize_mass_bound_3d(yukawa(), 1.0, 2.0),
                       doctest::Contains("potential out of class"), OutOfClassError);
}

TEST_CASE("confining truncation at q = 1 gives alpha m + min V") {
  const auto b = bowl();
  for (double m : {0.5, 1.0, 3.0}) {
    const auto t = bounds::confining_bound_at(b, m, 2.0, 1.0, 3);
    CHECK(std::abs(t.bound - (2.0 * m - 1.0)) < 1e-8);
  }
  const auto e = Potential::exponential(1, 1);  // no root: C stops at V(inf)
  const auto t = bounds::confining_bound_at(e, 2.0, 2.0, 1.0, 3);
  CHECK(std::abs(t.bound - (4.0 - 1.0)) < 1e-8);
  CHECK_FALSE(t.root_found);
}

TEST_CASE("confining root residual and validity") {
  for (double g : {0.1, 2.0}) {
    const auto v = Potential::logarithmic(g, 2.5);
    for (int dim : {1, 3}) {
      const auto t = bounds::confining_bound(v, 1.0, 2.0, dim);
      CHECK(t.root_found);
      CHECK(std::abs(t.residual) <= 1e-8);
      CHECK(t.bound == doctest::Approx(t.c_star));
      solver::SolverConfig c;
      c.dimension = dim;
      c.mass = 1.0;
      if (dim == 3) CHECK(t.bound <= solver::ground_state_3d_swave(v, c).mass);
    }
  }
}

TEST_CASE("argument validation") {
  const auto v = Potential::exponential(1, 1);
  CHECK_THROWS_AS(bounds::mass_bound_3d(v, 1.0, 2.0, 1.5), Error);
  CHECK_THROWS_AS(bounds::mass_bound_1d(v, 1.0, 2.0, 2.5), Error);
  CHECK_THROWS_AS(bounds::mass_bound_3d(v, -1.0, 2.0, 1.2), Error);
  CHECK_THROWS_AS(bounds::mass_bound_3d(Potential::singular(1, 1), 1.0, 2.0, 1.1),
                  DivergenceError);
}

}
