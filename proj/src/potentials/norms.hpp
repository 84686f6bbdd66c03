#pragma once

#include <utility>
#include <vector>

#include "potentials/potential.hpp"
#include "specfun/quadrature.hpp"

namespace salpeter::potentials {

// Ṽ(r) = min(V(r), C) and its shift V̄ = Ṽ - C <= 0.
struct TruncatedPotential {
  Potential base;
  double cutoff;

  double truncated(double r) const;
  double shifted(double r) const;
};

enum class NormMethod {
  Auto,        // closed form when available, quadrature otherwise
  Quadrature,  // always integrate numerically
};

// ||V^-||_inf = max(0, -inf V); +infinity when V is unbounded below.
double negative_part_sup(const Potential& v);

// ||V^-||_s over R^dim (dim 1 or 3), s > 1; s = +infinity gives the sup norm.
// 3D uses the radial measure 4 pi r^2 dr, 1D integrates V(|x|) over the line.
// Throws DivergenceError when V^- is not in L^s.
double negative_part_norm(const Potential& v, double s, int dim,
                          const specfun::QuadratureSpec& spec = {},
                          NormMethod method = NormMethod::Auto);

// ||V̄^-||_s = ||(C - V)_+||_s for the truncated-and-shifted potential.
double truncated_negative_norm(const TruncatedPotential& t, double s, int dim,
                               const specfun::QuadratureSpec& spec = {},
                               NormMethod method = NormMethod::Auto);

// Radial intervals on which V(r) < level; the upper end may be +infinity.
std::vector<std::pair<double, double>> below_level_intervals(const Potential& v,
                                                             double level);

}  // namespace salpeter::potentials
