#include "specfun/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "common/error.hpp"

namespace salpeter::specfun {

namespace {

// QUADPACK qk21 abscissae and weights.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525185564, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for kXgk[1], kXgk[3], ..., kXgk[9].
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kUflow = std::numeric_limits<double>::min();

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod21(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resk = kWgk[10] * fc;
  double resg = 0.0;
  double resabs = std::abs(resk);
  std::array<double, 10> fv1{}, fv2{};
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv1[j] = f1;
    fv2[j] = f2;
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - reskh);
  for (int j = 0; j < 10; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }
  const double value = resk * half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  if (resabs > kUflow / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
  if (!std::isfinite(value)) {
    std::ostringstream os;
    os << "quadrature: non-finite integrand on [" << a << ", " << b << "]";
    throw ConvergenceError(os.str());
  }
  return {a, b, value, err};
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0) || (abs_tol == 0.0 && rel_tol == 0.0)) {
    throw InvalidArgument("quadrature: tolerances must be nonnegative and not both zero");
  }
  if (max_subdivisions < 1) {
    throw InvalidArgument("quadrature: max_subdivisions must be >= 1");
  }
  if (!(max_decay_lengths > 0.0)) {
    throw InvalidArgument("quadrature: max_decay_lengths must be positive");
  }
}

QuadResult integrate(const Integrand& f, double a, double b,
                     const QuadratureSpec& spec) {
  spec.validate();
  if (a == b) return {};

  std::priority_queue<Segment> heap;
  Segment first = gauss_kronrod21(f, a, b);
  double total = first.value;
  double total_err = first.error;
  heap.push(first);
  int evaluations = 21;

  auto tolerance = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };

  int subdivisions = 0;
  while (total_err > tolerance()) {
    if (subdivisions >= spec.max_subdivisions) {
      std::ostringstream os;
      os << "quadrature: tolerance " << tolerance() << " not met on [" << a
         << ", " << b << "] after " << subdivisions
         << " subdivisions (error estimate " << total_err << ")";
      throw ConvergenceError(os.str());
    }
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval exhausted at double resolution; accept what we have.
      heap.push(worst);
      break;
    }
    Segment left = gauss_kronrod21(f, worst.a, mid);
    Segment right = gauss_kronrod21(f, mid, worst.b);
    evaluations += 42;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
  }

  // Re-sum from the leaves to shed accumulated cancellation in the running
  // totals.
  double value = 0.0, error = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  return {value, error, evaluations};
}

QuadResult integrate_to_infinity(const Integrand& f, double a,
                                 double decay_length,
                                 const QuadratureSpec& spec) {
  spec.validate();
  if (!(decay_length > 0.0)) {
    throw InvalidArgument("quadrature: decay length must be positive");
  }
  QuadResult sum;
  int quiet_chunks = 0;
  const int max_chunks = static_cast<int>(std::ceil(spec.max_decay_lengths));
  for (int k = 0; k < max_chunks; ++k) {
    const double lo = a + k * decay_length;
    const double hi = lo + decay_length;
    QuadResult chunk = integrate(f, lo, hi, spec);
    sum.value += chunk.value;
    sum.error += chunk.error;
    sum.evaluations += chunk.evaluations;
    const double floor = std::max(spec.abs_tol, spec.rel_tol * std::abs(sum.value));
    if (std::abs(chunk.value) <= 1e-3 * floor) {
      if (++quiet_chunks >= 2) return sum;
    } else {
      quiet_chunks = 0;
    }
  }
  throw ConvergenceError("quadrature: semi-infinite integrand did not decay within " +
                         std::to_string(max_chunks) + " decay lengths");
}

}  // namespace salpeter::specfun
