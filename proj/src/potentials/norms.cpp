#include "potentials/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "common/error.hpp"

namespace salpeter::potentials {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Interval = std::pair<double, double>;

// Bisection for the crossing of an increasing-or-decreasing f through level
// inside [lo, hi], given f(lo) < level <= f(hi) or the reverse.
template <class F>
double crossing(const F& f, double lo, double hi, double level) {
  const bool rising = f(lo) < level;
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if ((f(mid) < level) == rising) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void check_dim(int dim) {
  if (dim != 1 && dim != 3) {
    throw InvalidArgument("norm: dimension must be 1 or 3, got " + std::to_string(dim));
  }
}

double log_measure(int dim) {
  return dim == 3 ? std::log(4.0 * std::numbers::pi) : std::log(2.0);
}

std::string describe(const Potential& v) {
  std::ostringstream os;
  os << to_string(v.kind()) << " potential (g=" << v.coupling()
     << ", R=" << v.range() << ")";
  return os.str();
}

// Divergence conditions for ||(level - V)_+||_s over R^dim.
void check_integrable(const Potential& v, double level, double s, int dim) {
  if (level > v.limit_at_infinity()) {
    throw DivergenceError("norm diverges: the attractive part of the " + describe(v) +
                          " has unbounded support");
  }
  const double a = v.origin_exponent();
  if (a > 0.0 && a * s >= dim) {
    std::ostringstream os;
    os << describe(v) << " requires q > " << dim / (dim - a) << " (norm exponent s < "
       << dim / a << " in " << dim << "D); norm diverges at s = " << s;
    throw DivergenceError(os.str());
  }
}

// Closed forms for ||(level - V)_+||_s, returned as log of the s-th power.
// Available for the analytic profiles at level 0 and for the logarithm at
// any level.
bool closed_form_log_integral(const Potential& v, double level, double s, int dim,
                              double& out) {
  const double g = v.coupling();
  const double R = v.range();
  const double w = log_measure(dim);
  const double d = dim;
  switch (v.kind()) {
    case PotentialKind::Exponential:
      if (level != 0.0) return false;
      // int r^{d-1} e^{-s r/R} dr = Gamma(d) (R/s)^d
      out = w + s * std::log(g / R) + std::lgamma(d) - d * std::log(s / R);
      return true;
    case PotentialKind::PowerExponential:
      if (level != 0.0) return false;
      out = w + s * std::log(g / (R * R)) + std::lgamma(s + d) - (s + d) * std::log(s / R);
      return true;
    case PotentialKind::Singular:
      if (level != 0.0) return false;
      out = w + s * std::log(g) - 0.5 * s * std::log(R) + std::lgamma(d - 0.5 * s) -
            (d - 0.5 * s) * std::log(s / R);
      return true;
    case PotentialKind::Logarithmic: {
      // (level - V)_+ = g/R ln(r_c / r) on r < r_c = R exp(level R / g)
      const double log_rc = std::log(R) + level * R / g;
      out = w + s * std::log(g / R) + d * log_rc + std::lgamma(s + 1.0) -
            (s + 1.0) * std::log(d);
      return true;
    }
    case PotentialKind::Tabulated:
      return false;
  }
  return false;
}

double quadrature_norm(const Potential& v, double level, double s, int dim,
                       const specfun::QuadratureSpec& spec) {
  const auto intervals = below_level_intervals(v, level);
  if (intervals.empty()) return 0.0;

  // Normalize the excess by a representative depth so that the integrand is
  // O(1) even for large s.
  double depth = level - v.infimum();
  if (!std::isfinite(depth)) {
    const auto& [a, b] = intervals.front();
    const double upper = std::isfinite(b) ? b : a + v.length_scale();
    depth = level - v(a + 0.5 * (std::min(upper, a + v.length_scale()) - a));
  }
  if (!(depth > 0.0)) return 0.0;

  const auto excess = [&](double r) {
    const double e = (level - v(r)) / depth;
    if (!(e > 0.0)) return 0.0;
    return std::pow(e, s) * std::pow(r, dim - 1);
  };

  std::vector<double> knots;
  if (const Table* t = v.table()) knots = t->radii();

  specfun::QuadratureSpec rel = spec;
  double total = 0.0;
  auto add_finite = [&](double lo, double hi) {
    std::vector<double> cuts{lo};
    for (double k : knots) {
      if (k > lo && k < hi) cuts.push_back(k);
    }
    cuts.push_back(hi);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      total += specfun::integrate(excess, cuts[i], cuts[i + 1], rel).value;
    }
  };

  for (auto [a, b] : intervals) {
    double lo = a;
    if (a == 0.0 && v.singular_at_origin()) {
      // r = u^k with k (dim - a s) >= 1 flattens the r^{dim-1-as} endpoint
      // behaviour; k = 2 for the logarithm.
      const double k = std::max(2.0, 1.0 / (dim - v.origin_exponent() * s));
      const double head = std::min(b, v.length_scale());
      double from = 0.0;
      const double a_exp = v.origin_exponent();
      if (a_exp > 0.0) {
        // Below eps, V = V(eps) (eps/r)^a and the level is negligible:
        // closed form, since r = u^k would underflow near the divergence edge.
        const double eps = 1e-30 * head;
        const double e0 = (level - v(eps)) / depth;
        total += std::pow(e0, s) * std::pow(eps, dim) / (dim - a_exp * s);
        from = std::pow(eps, 1.0 / k);
      }
      const auto substituted = [&](double u) {
        return excess(std::pow(u, k)) * k * std::pow(u, k - 1.0);
      };
      total += specfun::integrate(substituted, from, std::pow(head, 1.0 / k), rel).value;
      lo = head;
    }
    if (std::isfinite(b)) {
      if (b > lo) add_finite(lo, b);
    } else {
      double start = lo;
      if (!knots.empty() && knots.back() > start) {
        add_finite(start, knots.back());
        start = knots.back();
      }
      total += specfun::integrate_to_infinity(excess, start, v.length_scale() / s, rel)
                   .value;
    }
  }
  return depth * std::pow(std::exp(log_measure(dim)) * total, 1.0 / s);
}

double excess_norm(const Potential& v, double level, double s, int dim,
                   const specfun::QuadratureSpec& spec, NormMethod method) {
  check_dim(dim);
  if (std::isnan(s) || s <= 1.0) {
    throw DomainError("norm: exponent s must be > 1");
  }
  if (std::isinf(s)) {
    const double sup = std::max(0.0, level - v.infimum());
    if (std::isinf(sup)) {
      throw DivergenceError("norm diverges: " + describe(v) + " is unbounded below");
    }
    return sup;
  }
  if (v.coupling() == 0.0) {
    if (level > 0.0) {
      throw DivergenceError("norm diverges: shifted zero potential has unbounded support");
    }
    return 0.0;
  }
  check_integrable(v, level, s, dim);
  if (method == NormMethod::Auto) {
    double log_integral = 0.0;
    if (closed_form_log_integral(v, level, s, dim, log_integral)) {
      return std::exp(log_integral / s);
    }
  }
  return quadrature_norm(v, level, s, dim, spec);
}

}  // namespace

double TruncatedPotential::truncated(double r) const { return std::min(base(r), cutoff); }

double TruncatedPotential::shifted(double r) const { return truncated(r) - cutoff; }

double negative_part_sup(const Potential& v) { return std::max(0.0, -v.infimum()); }

double negative_part_norm(const Potential& v, double s, int dim,
                          const specfun::QuadratureSpec& spec, NormMethod method) {
  return excess_norm(v, 0.0, s, dim, spec, method);
}

double truncated_negative_norm(const TruncatedPotential& t, double s, int dim,
                               const specfun::QuadratureSpec& spec, NormMethod method) {
  if (!std::isfinite(t.cutoff)) {
    throw InvalidArgument("truncation: cutoff C must be finite");
  }
  return excess_norm(t.base, t.cutoff, s, dim, spec, method);
}

std::vector<Interval> below_level_intervals(const Potential& v, double level) {
  const double g = v.coupling();
  const double R = v.range();
  if (g == 0.0) {
    if (level > 0.0) return {{0.0, kInf}};
    return {};
  }
  const auto V = [&](double r) { return v(r); };
  switch (v.kind()) {
    case PotentialKind::Exponential:
      if (level >= 0.0) return {{0.0, kInf}};
      if (level <= -g / R) return {};
      return {{0.0, R * std::log(g / (R * -level))}};
    case PotentialKind::Singular: {
      if (level >= 0.0) return {{0.0, kInf}};
      double hi = R;
      while (V(hi) < level) hi *= 2.0;
      double lo = hi;
      while (lo > 0.0 && V(lo) >= level) lo *= 0.5;
      return {{0.0, crossing(V, lo, hi, level)}};
    }
    case PotentialKind::PowerExponential: {
      if (level >= 0.0) return {{0.0, kInf}};
      if (level <= v.infimum()) return {};
      double lo = R;
      while (lo > 0.0 && V(lo) < level) lo *= 0.5;
      double hi = R;
      while (V(hi) < level) hi *= 2.0;
      return {{crossing(V, lo, R, level), crossing(V, R, hi, level)}};
    }
    case PotentialKind::Logarithmic:
      return {{0.0, R * std::exp(level * R / g)}};
    case PotentialKind::Tabulated: {
      const Table& t = *v.table();
      const auto& knots = t.radii();
      const auto below = [&](double r) { return g * t(r) < level; };
      std::vector<double> samples;
      samples.push_back(0.0);
      constexpr int kSub = 16;
      for (std::size_t i = 0; i < knots.size(); ++i) {
        if (i == 0) {
          if (knots[0] > 0.0) samples.push_back(knots[0]);
          continue;
        }
        for (int k = 1; k <= kSub; ++k) {
          samples.push_back(knots[i - 1] + (knots[i] - knots[i - 1]) * k / kSub);
        }
      }
      const auto Vt = [&](double r) { return g * t(r); };
      std::vector<Interval> out;
      bool inside = below(samples[0]);
      double start = 0.0;
      for (std::size_t i = 1; i < samples.size(); ++i) {
        const bool now = below(samples[i]);
        if (now != inside) {
          const double x = crossing(Vt, samples[i - 1], samples[i], level);
          if (inside) {
            out.emplace_back(start, x);
          } else {
            start = x;
          }
          inside = now;
        }
      }
      if (inside) out.emplace_back(start, g * t.last_value() < level ? kInf : knots.back());
      return out;
    }
  }
  return {};
}

}  // namespace salpeter::potentials
