#include "bounds/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <vector>

#include "common/error.hpp"
#include "specfun/constants.hpp"

namespace salpeter::bounds {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_inputs(double m, double alpha) {
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw DomainError("bound: mass m must be positive and finite");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("bound: alpha must be positive");
  }
}

void check_q(int dimension, double q) {
  const bool ok = dimension == 3 ? (q >= 1.0 && q < specfun::kMaxGreenExponent3d)
                                 : (q >= 1.0 && q <= 2.0);
  if (!ok) {
    std::ostringstream os;
    os << "bound: q = " << q << " outside the admissible interval "
       << (dimension == 3 ? "[1, 3/2)" : "[1, 2]");
    throw DomainError(os.str());
  }
}

double green_norm(int dimension, double q, double m, double alpha,
                  const specfun::QuadratureSpec& spec) {
  return dimension == 3 ? specfun::green_norm_3d(q, m, alpha, spec)
                        : specfun::green_norm_1d(q, m, alpha, spec);
}

// Value of an objective that may be undefined (divergent norm) at some q.
double guarded(const std::function<double(double)>& f, double q) {
  try {
    const double v = f(q);
    return std::isnan(v) ? -kInf : v;
  } catch (const DivergenceError&) {
    return -kInf;
  }
}

struct Maximum {
  double q;
  double value;
};

// Grid scan followed by golden-section refinement around the best grid node.
Maximum maximize(const std::function<double(double)>& f, double lo, double hi,
                 const OptimizerOptions& options) {
  const int n = std::max(options.grid_points, 3);
  std::vector<double> qs(n), vals(n);
  int best = 0;
  for (int i = 0; i < n; ++i) {
    qs[i] = lo + (hi - lo) * i / (n - 1);
    vals[i] = guarded(f, qs[i]);
    if (vals[i] > vals[best]) best = i;
  }
  if (!(vals[best] > -kInf)) {
    throw OutOfClassError(
        "potential out of class: the attractive part is not in L^p for any "
        "admissible exponent");
  }
  double a = qs[std::max(best - 1, 0)];
  double b = qs[std::min(best + 1, n - 1)];
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = guarded(f, x1);
  double f2 = guarded(f, x2);
  while (b - a > options.q_tolerance) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = guarded(f, x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = guarded(f, x1);
    }
  }
  Maximum result{qs[best], vals[best]};
  if (f1 > result.value) result = {x1, f1};
  if (f2 > result.value) result = {x2, f2};
  return result;
}

BoundReport make_report(int dimension, const Potential& v, double m, double alpha,
                        double q, const specfun::QuadratureSpec& spec) {
  check_inputs(m, alpha);
  check_q(dimension, q);
  BoundReport r;
  r.dimension = dimension;
  r.alpha = alpha;
  r.mass = m;
  r.q = q;
  r.potential_norm = potentials::negative_part_norm(v, dual_exponent(q), dimension, spec);
  r.green_norm = green_norm(dimension, q, m, alpha, spec);
  const double n = dimension;
  const double shrink = std::pow(specfun::combined_constant(q), n) *
                        (dimension == 3 ? specfun::green_constant_3d(q, spec)
                                        : specfun::green_constant_1d(q, spec)) *
                        std::pow(m, n - n / q) * r.potential_norm;
  r.mass_bound = alpha * m - shrink;
  r.binding_bound = -shrink;
  r.trivial_bound = alpha * m - potentials::negative_part_sup(v);
  r.vacuous = r.mass_bound < 0.0;
  return r;
}

BoundReport optimize(int dimension, const Potential& v, double m, double alpha,
                     const OptimizerOptions& options) {
  check_inputs(m, alpha);
  const auto objective = [&](double q) {
    return make_report(dimension, v, m, alpha, q, options.quadrature).mass_bound;
  };
  const Maximum best = maximize(objective, 1.0, max_exponent(dimension, options), options);
  return make_report(dimension, v, m, alpha, best.q, options.quadrature);
}

}  // namespace

double max_exponent(int dimension, const OptimizerOptions& options) {
  if (dimension == 3) return specfun::kMaxGreenExponent3d - options.upper_margin;
  if (dimension == 1) return 2.0;
  throw InvalidArgument("bound: dimension must be 1 or 3");
}

double dual_exponent(double q) { return q == 1.0 ? kInf : q / (q - 1.0); }

double master_bound(int dimension, double q, double m, double alpha,
                    double potential_norm, const specfun::QuadratureSpec& spec) {
  check_inputs(m, alpha);
  check_q(dimension, q);
  const double inverse_g1 = alpha * m;  // 1 / ||G||_1 in both dimensions
  if (potential_norm == 0.0) return inverse_g1;
  const double c = std::pow(specfun::combined_constant(q), dimension);
  return inverse_g1 * (1.0 - c * potential_norm * green_norm(dimension, q, m, alpha, spec));
}

double mass_bound_3d(const Potential& v, double m, double alpha, double q,
                     const specfun::QuadratureSpec& spec) {
  return make_report(3, v, m, alpha, q, spec).mass_bound;
}

BoundReport bound_report_3d(const Potential& v, double m, double alpha, double q,
                            const specfun::QuadratureSpec& spec) {
  return make_report(3, v, m, alpha, q, spec);
}

BoundReport optimize_mass_bound_3d(const Potential& v, double m, double alpha,
                                   const OptimizerOptions& options) {
  return optimize(3, v, m, alpha, options);
}

double binding_energy_bound_3d(const Potential& v, double m, double alpha,
                               const OptimizerOptions& options) {
  return optimize_mass_bound_3d(v, m, alpha, options).binding_bound;
}

double mass_bound_1d(const Potential& v, double m, double alpha, double q,
                     const specfun::QuadratureSpec& spec) {
  return make_report(1, v, m, alpha, q, spec).mass_bound;
}

BoundReport bound_report_1d(const Potential& v, double m, double alpha, double q,
                            const specfun::QuadratureSpec& spec) {
  return make_report(1, v, m, alpha, q, spec);
}

BoundReport optimize_mass_bound_1d(const Potential& v, double m, double alpha,
                                   const OptimizerOptions& options) {
  return optimize(1, v, m, alpha, options);
}

CriticalCouplingBound critical_coupling_bound_3d(const Potential& v, double m,
                                                 double alpha,
                                                 const OptimizerOptions& options) {
  check_inputs(m, alpha);
  const Potential shape = v.with_coupling(1.0);
  if (potentials::negative_part_sup(shape) == 0.0) {
    return {kInf, 1.0, true};
  }
  const auto& spec = options.quadrature;
  const auto objective = [&](double q) {
    const double norm = potentials::negative_part_norm(shape, dual_exponent(q), 3, spec);
    const double denom = std::pow(specfun::combined_constant(q), 3) *
                         specfun::green_constant_3d(q, spec) *
                         std::pow(m, 2.0 - 3.0 / q) * norm;
    return alpha / denom;
  };
  const Maximum best = maximize(objective, 1.0, max_exponent(3, options), options);
  return {best.value, best.q, false};
}

TruncationResult confining_bound_at(const Potential& v, double m, double alpha,
                                    double q, int dimension,
                                    const specfun::QuadratureSpec& spec) {
  check_inputs(m, alpha);
  check_q(dimension, q);
  const double s = dual_exponent(q);
  const double scale = std::pow(specfun::combined_constant(q), dimension) *
                       green_norm(dimension, q, m, alpha, spec);
  // Left-hand side of the root condition; strictly increasing in C.
  const auto lhs = [&](double c) {
    return scale * potentials::truncated_negative_norm({v, c}, s, dimension, spec);
  };
  const double inverse_g1 = alpha * m;

  TruncationResult out;
  out.dimension = dimension;
  out.q_star = q;

  const double v_inf = v.limit_at_infinity();
  double hi;
  if (std::isfinite(v_inf)) {
    const double at_top = lhs(v_inf);
    if (at_top <= 1.0) {
      // Every admissible cutoff keeps the shifted mass bound positive; the
      // best is the largest one, C = lim V.
      out.c_star = v_inf;
      out.bound = v_inf + inverse_g1 * (1.0 - at_top);
      out.residual = 1.0 - at_top;
      out.root_found = false;
      return out;
    }
    hi = v_inf;
  } else {
    double step = inverse_g1;
    hi = v(v.length_scale()) + step;
    while (lhs(hi) <= 1.0) {
      step *= 2.0;
      hi += step;
      if (!std::isfinite(hi)) throw BracketError("confining bound: no upper cutoff bracket");
    }
  }

  double lo;
  if (std::isfinite(v.infimum())) {
    lo = v.infimum();  // empty negative part, lhs = 0
  } else {
    double step = inverse_g1;
    lo = hi - step;
    while (lhs(lo) >= 1.0) {
      step *= 2.0;
      lo -= step;
      if (!std::isfinite(lo)) {
        throw VacuousBound("confining bound: root condition exceeds 1 for every cutoff");
      }
    }
  }

  double f_lo = lhs(lo);
  for (int it = 0; it < 300; ++it) {
    if (1.0 - f_lo <= 1e-13) break;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f = lhs(mid);
    if (f < 1.0) {
      lo = mid;
      f_lo = f;
    } else {
      hi = mid;
    }
  }
  // lo satisfies lhs <= 1, so the shifted mass bound is nonnegative there and
  // lo + alpha m (1 - lhs) is a rigorous bound; it equals C* up to the residual.
  out.c_star = lo;
  out.residual = 1.0 - f_lo;
  out.bound = lo + inverse_g1 * out.residual;
  out.root_found = true;
  return out;
}

TruncationResult confining_bound(const Potential& v, double m, double alpha,
                                 int dimension, const OptimizerOptions& options) {
  check_inputs(m, alpha);
  const auto objective = [&](double q) {
    if (q == 1.0 && !std::isfinite(v.infimum())) return -kInf;
    return confining_bound_at(v, m, alpha, q, dimension, options.quadrature).bound;
  };
  const Maximum best =
      maximize(objective, 1.0, max_exponent(dimension, options), options);
  return confining_bound_at(v, m, alpha, best.q, dimension, options.quadrature);
}

}  // namespace salpeter::bounds
