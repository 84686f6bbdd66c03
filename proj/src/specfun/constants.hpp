#pragma once

#include "specfun/quadrature.hpp"

namespace salpeter::specfun {

// Exponent triple of the three-function convolution inequality,
// 1/p + 1/q + 1/r = 2 with every exponent >= 1. Infinity is allowed.
struct YoungExponents {
  double p, q, r;

  // Throws InvalidArgument when the triple is inadmissible.
  static YoungExponents make(double p, double q, double r);
  // The triple (2q/(3q-2), q, 2) used by the bound, 1 <= q <= 2.
  static YoungExponents for_bound(double q);
};

// Sharp Young constant C_p, (C_p)^2 = p^{1/p} p'^{-1/p'} with 1/p + 1/p' = 1.
// C_1 = C_inf = 1.
double young_constant(double p);

// Product C_q C_{2q/(3q-2)} evaluated from the closed form
//   q^{1/q} ((q-1)/q)^{(q-1)/q} (2q/(3q-2))^{(3q-2)/2q} ((2-q)/2q)^{(2-q)/2q}
// under a square root, with 0^0 = 1 at the endpoints. Domain 1 <= q <= 2.
double combined_constant(double q);

// int_0^inf x^{2-q} K1(x)^q dx for 1 <= q < 3/2.
double k1_power_integral(double q, const QuadratureSpec& spec = {});

// int_0^inf K0(x)^q dx for q >= 1.
double k0_power_integral(double q, const QuadratureSpec& spec = {});

// Mass-independent part of the 3D Green's-function q-norm:
//   (4 pi)^{1/q} / (2 pi^2) * [k1_power_integral(q)]^{1/q}.
// Memoized per (q, tolerances); safe for concurrent callers.
double green_constant_3d(double q, const QuadratureSpec& spec = {});

// 1D counterpart: 2^{1/q} / pi * [k0_power_integral(q)]^{1/q}.
double green_constant_1d(double q, const QuadratureSpec& spec = {});

// ||G^(3)||_q = m^{2-3/q} green_constant_3d(q) / alpha.
double green_norm_3d(double q, double m, double alpha,
                     const QuadratureSpec& spec = {});

// ||G^(1)||_q = m^{-1/q} green_constant_1d(q) / alpha.
double green_norm_1d(double q, double m, double alpha,
                     const QuadratureSpec& spec = {});

// Largest admissible exponent (exclusive) for the 3D Green's function norm.
inline constexpr double kMaxGreenExponent3d = 1.5;

}  // namespace salpeter::specfun
