#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <random>

#include "common/error.hpp"
#include "potentials/norms.hpp"
#include "potentials/potential.hpp"

using namespace salpeter;
using potentials::NormMethod;
using potentials::Potential;
using std::numbers::pi;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ||(level - V)_+||_s by Boost double-exponential quadrature, split at the
// supplied breakpoints.
double oracle(const Potential& v, double level, double s, int dim,
              std::vector<double> breaks) {
  auto f = [&](double r) {
    if (r <= 0.0) return 0.0;
    const double d = level - v(r);
    if (d <= 0.0) return 0.0;
    const double w = dim == 3 ? 4 * pi * r * r : 2.0;
    return w * std::pow(d, s);
  };
  boost::math::quadrature::tanh_sinh<double> ts;
  boost::math::quadrature::exp_sinh<double> es;
  // r = u^k on the first segment flattens integrable singularities at r = 0.
  constexpr double k = 20.0;
  auto fu = [&](double u) {
    const double val = f(std::pow(u, k)) * k * std::pow(u, k - 1);
    // 0 * inf where r^2 underflows; the u-integrand vanishes there.
    return std::isfinite(val) ? val : 0.0;
  };
  double total = ts.integrate(fu, 0.0, std::pow(breaks.front(), 1 / k));
  double a = breaks.front();
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    total += ts.integrate(f, a, breaks[i]);
    a = breaks[i];
  }
  total += es.integrate(f, a, kInf);
  return std::pow(total, 1.0 / s);
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_SUITE("norms") {

TEST_CASE("exponential closed form") {
  const double g = 1.3, R = 0.7;
  const auto v = Potential::exponential(g, R);
  for (double s : {1.5, 3.0, 7.0}) {
    const double expect = g * std::pow(R, 3 / s - 1) * std::pow(8 * pi / (s * s * s), 1 / s);
    CHECK(rel(potentials::negative_part_norm(v, s, 3), expect) < 1e-13);
    const double expect1 = std::pow(2 * std::pow(g / R, s) * R / s, 1 / s);
    CHECK(rel(potentials::negative_part_norm(v, s, 1), expect1) < 1e-13);
  }
}

TEST_CASE("closed forms agree with quadrature and with an independent integrator") {
  for (auto v : {Potential::exponential(1, 1), Potential::power_exponential(2, 0.5),
                 Potential::singular(0.7, 1.5)}) {
    for (int dim : {1, 3}) {
      for (double s : {1.2, 1.9, 3.0, 5.5}) {
        if (v.kind() == potentials::PotentialKind::Singular && s * 0.5 >= dim) continue;
        CAPTURE(to_string(v.kind()));
        CAPTURE(dim);
        CAPTURE(s);
        const double a = potentials::negative_part_norm(v, s, dim);
        const double b = potentials::negative_part_norm(v, s, dim, {}, NormMethod::Quadrature);
        CHECK(rel(a, b) < 1e-9);
        CHECK(rel(a, oracle(v, 0.0, s, dim, {v.range()})) < 1e-9);
      }
    }
  }
}

TEST_CASE("sup norm") {
  CHECK(potentials::negative_part_norm(Potential::exponential(2, 0.5), kInf, 3) ==
        doctest::Approx(4.0));
  CHECK(potentials::negative_part_sup(Potential::power_exponential(1, 1)) ==
        doctest::Approx(1 / std::numbers::e));
  CHECK_THROWS_AS(potentials::negative_part_norm(Potential::singular(1, 1), kInf, 3),
                  DivergenceError);
}

TEST_CASE("norms scale linearly with the coupling") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> gs(0.01, 50.0), ss(1.1, 5.0);
  for (int i = 0; i < 60; ++i) {
    const double g = gs(rng), s = ss(rng);
    for (auto base : {Potential::exponential(1, 1.1), Potential::power_exponential(1, 0.6),
                      Potential::singular(1, 0.9)}) {
      const double a = potentials::negative_part_norm(base.with_coupling(g), s, 3);
      const double b = g * potentials::negative_part_norm(base, s, 3);
      CHECK(rel(a, b) < 1e-12);
    }
  }
}

TEST_CASE("singular profile diverges for s >= dim / a with an actionable message") {
  const auto v = Potential::singular(1, 1);
  CHECK_THROWS_AS(potentials::negative_part_norm(v, 6.0, 3), DivergenceError);
  CHECK_THROWS_WITH_AS(potentials::negative_part_norm(v, 11.0, 3),
                       doctest::Contains("requires q > 1.2"), DivergenceError);
  CHECK_THROWS_AS(potentials::negative_part_norm(v, 2.0, 1), DivergenceError);
  CHECK_NOTHROW(potentials::negative_part_norm(v, 5.9, 3));
}

TEST_CASE("quadrature path near the divergence edge") {
  const double g = 0.7, R = 1.5;
  const auto v = Potential::singular(g, R);
  for (double s : {1.9, 1.99, 1.999}) {
    CAPTURE(s);
    const double exact = std::pow(2 * std::pow(g, s) * std::pow(R, -s / 2) *
                                      std::tgamma(1 - s / 2) * std::pow(R / s, 1 - s / 2),
                                  1 / s);
    CHECK(rel(potentials::negative_part_norm(v, s, 1, {}, NormMethod::Quadrature), exact) <
          1e-9);
  }
  for (double s : {5.5, 5.95}) {
    CAPTURE(s);
    const double a = potentials::negative_part_norm(v, s, 3);
    CHECK(rel(potentials::negative_part_norm(v, s, 3, {}, NormMethod::Quadrature), a) < 1e-9);
  }
}

TEST_CASE("logarithmic excess norm") {
  const auto v = Potential::logarithmic(0.5, 2.5);
  for (double level : {-0.3, 0.0, 0.4}) {
    for (double s : {1.5, 4.0}) {
      const double rc = 2.5 * std::exp(level * 2.5 / 0.5);
      for (int dim : {1, 3}) {
        const double a = potentials::truncated_negative_norm({v, level}, s, dim);
        const double b = oracle(v, level, s, dim, {rc});
        CHECK(rel(a, b) < 1e-9);
        const double c =
            potentials::truncated_negative_norm({v, level}, s, dim, {}, NormMethod::Quadrature);
        CHECK(rel(a, c) < 1e-9);
      }
    }
  }
  // The negative part lives on [0, R] and is finite in every L^s.
  CHECK(rel(potentials::negative_part_norm(v, 2.0, 3),
            potentials::truncated_negative_norm({v, 0.0}, 2.0, 3)) < 1e-12);
}

TEST_CASE("truncated norms: consistency with the untruncated and empty cases") {
  const auto e = Potential::exponential(1.2, 0.9);
  for (double s : {1.5, 3.0}) {
    CHECK(rel(potentials::truncated_negative_norm({e, 0.0}, s, 3),
              potentials::negative_part_norm(e, s, 3)) < 1e-12);
    const double c = -0.4;
    CHECK(rel(potentials::truncated_negative_norm({e, c}, s, 3),
              oracle(e, c, s, 3, {0.9 * std::log(1.2 / 0.9 / 0.4)})) < 1e-9);
    CHECK(potentials::truncated_negative_norm({e, e.infimum() - 0.1}, s, 3) == 0.0);
  }
  CHECK_THROWS_AS(potentials::truncated_negative_norm({e, 0.1}, 2.0, 3), DivergenceError);
}

TEST_CASE("truncated tabulated potential") {
  std::vector<double> r, val;
  for (int i = 0; i <= 50; ++i) {
    r.push_back(0.2 * i);
    val.push_back(r.back() * r.back() - 1.0);
  }
  const auto t = Potential::tabulated(std::make_shared<potentials::Table>(r, val), 1.0);
  for (double level : {0.0, 3.0}) {
    const double a = potentials::truncated_negative_norm({t, level}, 2.0, 3);
    const double b = oracle(t, level, 2.0, 3, {std::sqrt(level + 1.0)});
    CHECK(rel(a, b) < 1e-6);
  }
}

TEST_CASE("level intervals") {
  const auto pe = Potential::power_exponential(1, 1);
  const auto iv = potentials::below_level_intervals(pe, -0.2);
  REQUIRE(iv.size() == 1);
  CHECK(pe(iv[0].first) == doctest::Approx(-0.2).epsilon(1e-10));
  CHECK(pe(iv[0].second) == doctest::Approx(-0.2).epsilon(1e-10));
  CHECK(potentials::below_level_intervals(pe, -1.0).empty());
}

}
