#include "specfun/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "common/error.hpp"

namespace salpeter::specfun {

namespace {

constexpr double kCrossover = 2.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_domain(double x, const char* name) {
  if (!(x > 0.0)) {
    throw DomainError(std::string(name) + ": argument must be positive, got " +
                      std::to_string(x));
  }
}

// Small-argument series (A&S 9.6.13 and 9.6.11 with n = 1).
//   K0 = -(ln(x/2) + gamma) I0 + sum_{k>=1} H_k t^k / (k!)^2
//   K1 = 1/x + ln(x/2) I1 - (x/4) sum_{k>=0} (psi(k+1) + psi(k+2)) t^k / (k!(k+1)!)
// with t = x^2/4.
std::pair<double, double> series_k0_k1(double x) {
  const double t = 0.25 * x * x;
  const double lg = std::log(0.5 * x);
  const double gamma = std::numbers::egamma;

  double i0 = 0.0, i1 = 0.0, s0 = 0.0, s1 = 0.0;
  double term0 = 1.0;  // t^k / (k!)^2
  double term1 = 1.0;  // t^k / (k!(k+1)!)
  double harmonic = 0.0;
  for (int k = 0; k < 60; ++k) {
    if (k > 0) {
      term0 *= t / (double(k) * double(k));
      term1 *= t / (double(k) * double(k + 1));
      harmonic += 1.0 / k;
    }
    const double psi_k1 = -gamma + harmonic;
    const double psi_k2 = psi_k1 + 1.0 / (k + 1);
    i0 += term0;
    i1 += term1;
    s0 += harmonic * term0;
    s1 += (psi_k1 + psi_k2) * term1;
    if (k > 2 && term0 < kEps * 1e-3 * i0 && term1 < kEps * 1e-3 * i1) break;
  }
  i1 *= 0.5 * x;
  const double k0 = -(lg + gamma) * i0 + s0;
  const double k1 = 1.0 / x + lg * i1 - 0.25 * x * s1;
  return {k0, k1};
}

// Steed's continued fraction for exp(x) K0(x) and exp(x) K1(x), x >= 2
// (Temme's CF2 with nu = 0).
std::pair<double, double> cf2_scaled_k0_k1(double x) {
  const double a1 = 0.25;
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0, q2 = 1.0;
  double q = a1, c = a1, a = -a1;
  double s = 1.0 + q * delh;
  int i = 1;
  for (; i < 10000; ++i) {
    a -= 2 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) break;
  }
  if (i == 10000) {
    throw ConvergenceError("bessel: continued fraction did not converge");
  }
  h *= a1;
  const double k0 = std::sqrt(std::numbers::pi / (2.0 * x)) / s;
  const double k1 = k0 * (x + 0.5 - h) / x;
  return {k0, k1};
}

}  // namespace

double bessel_k0(double x) {
  check_domain(x, "bessel_k0");
  if (x <= kCrossover) return series_k0_k1(x).first;
  return cf2_scaled_k0_k1(x).first * std::exp(-x);
}

double bessel_k1(double x) {
  check_domain(x, "bessel_k1");
  if (x <= kCrossover) return series_k0_k1(x).second;
  return cf2_scaled_k0_k1(x).second * std::exp(-x);
}

double bessel_k0_scaled(double x) {
  check_domain(x, "bessel_k0_scaled");
  if (x <= kCrossover) return series_k0_k1(x).first * std::exp(x);
  return cf2_scaled_k0_k1(x).first;
}

double bessel_k1_scaled(double x) {
  check_domain(x, "bessel_k1_scaled");
  if (x <= kCrossover) return series_k0_k1(x).second * std::exp(x);
  return cf2_scaled_k0_k1(x).second;
}

double x_bessel_k1(double x) {
  if (x == 0.0) return 1.0;
  check_domain(x, "x_bessel_k1");
  if (x < 1e-150) return 1.0;  // x^2 ln x correction is below rounding
  return x * bessel_k1(x);
}

}  // namespace salpeter::specfun
