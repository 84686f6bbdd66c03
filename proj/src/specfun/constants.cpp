#include "specfun/constants.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <tuple>

#include "common/error.hpp"
#include "specfun/bessel.hpp"

namespace salpeter::specfun {

namespace {


// a^b with the continuous convention 0^0 = 1.
double pow00(double a, double b) {
  if (a == 0.0 && b == 0.0) return 1.0;
  return std::pow(a, b);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

class ConstantCache {
 public:
  template <class F>
  double get(int which, double q, const QuadratureSpec& spec, F&& compute) {
    const Key key{which, q, spec.abs_tol, spec.rel_tol, spec.max_subdivisions};
    {
      std::lock_guard lock(mutex_);
      if (auto it = values_.find(key); it != values_.end()) return it->second;
    }
    const double v = compute();
    std::lock_guard lock(mutex_);
    values_.emplace(key, v);
    return v;
  }

 private:
  using Key = std::tuple<int, double, double, double, int>;
  std::mutex mutex_;
  std::map<Key, double> values_;
};

ConstantCache& cache() {
  static ConstantCache instance;
  return instance;
}

void check_mass_alpha(double m, double alpha) {
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw DomainError("green norm: mass must be positive and finite, got " + fmt(m));
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("green norm: alpha must be positive, got " + fmt(alpha));
  }
}

}  // namespace

YoungExponents YoungExponents::make(double p, double q, double r) {
  auto inv = [](double e) { return std::isinf(e) ? 0.0 : 1.0 / e; };
  if (!(p >= 1.0) || !(q >= 1.0) || !(r >= 1.0)) {
    throw InvalidArgument("young exponents must all be >= 1");
  }
  if (std::abs(inv(p) + inv(q) + inv(r) - 2.0) > 1e-12) {
    throw InvalidArgument("young exponents must satisfy 1/p + 1/q + 1/r = 2");
  }
  return {p, q, r};
}

YoungExponents YoungExponents::for_bound(double q) {
  if (!(q >= 1.0 && q <= 2.0)) {
    throw DomainError("young exponents: q must lie in [1, 2], got " + fmt(q));
  }
  return make(2.0 * q / (3.0 * q - 2.0), q, 2.0);
}

double young_constant(double p) {
  if (std::isnan(p) || p < 1.0) {
    throw DomainError("young_constant: p must be >= 1, got " + fmt(p));
  }
  if (p == 1.0 || std::isinf(p)) return 1.0;
  const double pc = p / (p - 1.0);
  // log (C_p)^2 = ln(p)/p - ln(p')/p'
  return std::exp(0.5 * (std::log(p) / p - std::log(pc) / pc));
}

double combined_constant(double q) {
  if (std::isnan(q) || q < 1.0 || q > 2.0) {
    throw DomainError("combined_constant: q must lie in [1, 2], got " + fmt(q));
  }
  const double a = std::pow(q, 1.0 / q);
  const double b = pow00((q - 1.0) / q, (q - 1.0) / q);
  const double c = std::pow(2.0 * q / (3.0 * q - 2.0), (3.0 * q - 2.0) / (2.0 * q));
  const double d = pow00((2.0 - q) / (2.0 * q), (2.0 - q) / (2.0 * q));
  return std::sqrt(a * b * c * d);
}

double k1_power_integral(double q, const QuadratureSpec& spec) {
  if (std::isnan(q) || q < 1.0 || q >= kMaxGreenExponent3d) {
    throw DomainError("k1_power_integral: q must lie in [1, 3/2), got " + fmt(q));
  }
  // On [0, 1] the integrand is x^{2-2q} (x K1(x))^q; x = u^{1/(3-2q)} turns
  // the endpoint power into a constant Jacobian.
  const double a = 3.0 - 2.0 * q;
  const auto inner = [q, a](double u) {
    const double x = std::pow(u, 1.0 / a);
    return std::pow(x_bessel_k1(x), q) / a;
  };
  const auto outer = [q](double x) {
    return std::pow(x, 2.0 - q) * std::pow(bessel_k1_scaled(x), q) *
           std::exp(-q * (x - 1.0));
  };
  const double head = integrate(inner, 0.0, 1.0, spec).value;
  const double tail =
      std::exp(-q) * integrate_to_infinity(outer, 1.0, 1.0 / q, spec).value;
  return head + tail;
}

double k0_power_integral(double q, const QuadratureSpec& spec) {
  if (std::isnan(q) || q < 1.0 || std::isinf(q)) {
    throw DomainError("k0_power_integral: q must be finite and >= 1, got " + fmt(q));
  }
  // x = exp(-t) on [0, 1] maps the logarithmic singularity to t^q e^{-t}.
  const auto inner = [q](double t) {
    return std::pow(bessel_k0(std::exp(-t)), q) * std::exp(-t);
  };
  const auto outer = [q](double x) {
    return std::pow(bessel_k0_scaled(x), q) * std::exp(-q * (x - 1.0));
  };
  const double head = integrate_to_infinity(inner, 0.0, 1.0, spec).value;
  const double tail =
      std::exp(-q) * integrate_to_infinity(outer, 1.0, 1.0 / q, spec).value;
  return head + tail;
}

double green_constant_3d(double q, const QuadratureSpec& spec) {
  return cache().get(3, q, spec, [&] {
    const double integral = k1_power_integral(q, spec);
    return std::pow(4.0 * std::numbers::pi, 1.0 / q) /
           (2.0 * std::numbers::pi * std::numbers::pi) * std::pow(integral, 1.0 / q);
  });
}

double green_constant_1d(double q, const QuadratureSpec& spec) {
  return cache().get(1, q, spec, [&] {
    const double integral = k0_power_integral(q, spec);
    return std::pow(2.0, 1.0 / q) / std::numbers::pi * std::pow(integral, 1.0 / q);
  });
}

double green_norm_3d(double q, double m, double alpha, const QuadratureSpec& spec) {
  check_mass_alpha(m, alpha);
  return std::pow(m, 2.0 - 3.0 / q) * green_constant_3d(q, spec) / alpha;
}

double green_norm_1d(double q, double m, double alpha, const QuadratureSpec& spec) {
  check_mass_alpha(m, alpha);
  return std::pow(m, -1.0 / q) * green_constant_1d(q, spec) / alpha;
}

}  // namespace salpeter::specfun
