#include <doctest.h>

#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>

#include "common/error.hpp"
#include "potentials/potential.hpp"
#include "potentials/table.hpp"

using namespace salpeter;
using potentials::Potential;
using potentials::Table;

TEST_SUITE("potentials") {

TEST_CASE("analytic profiles") {
  const double g = 1.7, R = 0.8, r = 0.55;
  CHECK(Potential::exponential(g, R)(r) == doctest::Approx(-g / R * std::exp(-r / R)).epsilon(1e-15));
  CHECK(Potential::power_exponential(g, R)(r) ==
        doctest::Approx(-g * r / (R * R) * std::exp(-r / R)).epsilon(1e-15));
  CHECK(Potential::singular(g, R)(r) ==
        doctest::Approx(-g / std::sqrt(r * R) * std::exp(-r / R)).epsilon(1e-15));
  CHECK(Potential::logarithmic(g, R)(r) == doctest::Approx(g / R * std::log(r / R)).epsilon(1e-15));
}

TEST_CASE("infimum, limits and origin behaviour") {
  CHECK(Potential::exponential(2, 0.5).infimum() == doctest::Approx(-4.0));
  CHECK(Potential::power_exponential(1, 1).infimum() == doctest::Approx(-1 / std::numbers::e));
  CHECK(std::isinf(Potential::singular(1, 1).infimum()));
  CHECK(std::isinf(Potential::logarithmic(1, 1).limit_at_infinity()));
  CHECK(Potential::singular(1, 1).origin_exponent() == 0.5);
  CHECK(Potential::singular(1, 1).singular_at_origin());
  CHECK(Potential::logarithmic(1, 1).singular_at_origin());
  CHECK_FALSE(Potential::exponential(1, 1).singular_at_origin());
  CHECK_THROWS_AS(Potential::singular(1, 1)(0.0), DomainError);
  CHECK_THROWS_AS(Potential::exponential(1, 1)(-0.1), DomainError);
}

TEST_CASE("coupling enters linearly") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.01, 10.0);
  for (auto base : {Potential::exponential(1, 1.3), Potential::power_exponential(1, 0.4),
                    Potential::singular(1, 2.0), Potential::logarithmic(1, 2.5)}) {
    for (int i = 0; i < 50; ++i) {
      const double g = u(rng), r = u(rng);
      CHECK(base.with_coupling(g)(r) == doctest::Approx(g * base(r)).epsilon(1e-15));
    }
  }
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(Potential::exponential(-1, 1), InvalidArgument);
  CHECK_THROWS_AS(Potential::exponential(1, 0), InvalidArgument);
  CHECK_THROWS_AS(Table({1, 1}, {0, 0}), InvalidArgument);
  CHECK_THROWS_AS(Table({0}, {0}), InvalidArgument);
}

TEST_CASE("table reproduces knots and stays within neighbouring data") {
  std::vector<double> r, v;
  for (int i = 0; i <= 40; ++i) {
    r.push_back(0.1 * i);
    v.push_back(-std::exp(-0.1 * i) * std::cos(0.3 * i));
  }
  const Table t(r, v);
  for (std::size_t i = 0; i < r.size(); ++i) CHECK(t(r[i]) == doctest::Approx(v[i]).epsilon(1e-15));
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    const double lo = std::min(v[i], v[i + 1]), hi = std::max(v[i], v[i + 1]);
    for (double w : {0.25, 0.5, 0.75}) {
      const double x = t(r[i] + w * (r[i + 1] - r[i]));
      CHECK(x >= lo - 1e-15);
      CHECK(x <= hi + 1e-15);
    }
  }
  CHECK(t(100.0) == v.back());
}

TEST_CASE("table interpolation converges to a smooth profile") {
  auto f = [](double x) { return -std::exp(-x); };
  double prev = 1.0;
  for (int n : {20, 40, 80}) {
    std::vector<double> r, v;
    for (int i = 0; i <= n; ++i) {
      r.push_back(5.0 * i / n);
      v.push_back(f(r.back()));
    }
    const Table t(r, v);
    double err = 0;
    for (int k = 0; k < 997; ++k) err = std::max(err, std::abs(t(5.0 * k / 997) - f(5.0 * k / 997)));
    CHECK(err < prev / 3);
    prev = err;
  }
  CHECK(prev < 1e-4);
}

TEST_CASE("table inward power law detects a Coulomb-like origin") {
  std::vector<double> r, v;
  for (int i = 0; i < 30; ++i) {
    r.push_back(0.05 * std::pow(1.2, i));
    v.push_back(-std::exp(-r.back()) / r.back());
  }
  const Table t(r, v);
  CHECK(t.origin_exponent() == doctest::Approx(1.0).epsilon(0.06));
  CHECK(t(0.01) < t(0.05));
  CHECK(std::isinf(t.min_value()));
  const auto p = Potential::tabulated(std::make_shared<Table>(t));
  CHECK(p.singular_at_origin());
  CHECK_THROWS_AS(p(0.0), DomainError);
}

TEST_CASE("table parsing") {
  std::istringstream in("# r V\n0 -1\n1 -0.5  # trailing\n\n2 0\n");
  const Table t = Table::parse(in);
  CHECK(t.radii().size() == 3);
  CHECK(t(1.0) == -0.5);
  std::istringstream bad("0 -1\n1\n");
  CHECK_THROWS_AS(Table::parse(bad), InvalidArgument);
  CHECK_THROWS_AS(Table::load("/nonexistent/table.txt"), IoError);
  const Table y = Table::load(std::string(SALPETER_TEST_DATA) + "/yukawa.txt");
  CHECK(y.origin_exponent() > 0.9);
}

TEST_CASE("zero potential") {
  const auto z = Potential::zero();
  CHECK(z(3.0) == 0.0);
  CHECK(z.infimum() == 0.0);
}

}
