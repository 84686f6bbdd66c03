#pragma once

#include "potentials/norms.hpp"
#include "potentials/potential.hpp"
#include "specfun/quadrature.hpp"

namespace salpeter::bounds {

using potentials::Potential;

// Ground-state mass lower bound at a particular Young exponent q.
struct BoundReport {
  int dimension = 3;
  double alpha = 2.0;
  double mass = 1.0;               // constituent mass m
  double q = 1.0;                  // Green's-function norm exponent
  double potential_norm = 0.0;     // ||V^-||_{q/(q-1)}
  double green_norm = 0.0;         // ||G||_q
  double mass_bound = 0.0;         // M >= mass_bound
  double binding_bound = 0.0;      // E >= binding_bound, = mass_bound - alpha m
  double trivial_bound = 0.0;      // q -> 1 value, alpha m - ||V^-||_inf
  bool vacuous = false;            // mass_bound < 0: only M >= 0 is informative
};

struct TruncationResult {
  int dimension = 3;
  double q_star = 1.0;
  double c_star = 0.0;       // optimal cutoff C*
  double bound = 0.0;        // M >= bound (= C* when the root exists)
  double residual = 0.0;     // |C^n ||G||_q ||V̄^-|| - 1| at (q*, C*)
  bool root_found = true;    // false: no cutoff reaches the root for q*
};

struct CriticalCouplingBound {
  double value = 0.0;  // lower limit on the coupling where M reaches 0
  double q = 1.0;
  bool unbounded = false;  // v^- == 0: no finite critical coupling
};

struct OptimizerOptions {
  int grid_points = 64;
  double q_tolerance = 1e-9;  // golden-section bracket width
  // Exclusive distance kept from the 3D exponent limit 3/2.
  double upper_margin = 1e-6;
  specfun::QuadratureSpec quadrature{};
};

// Admissible exponent interval [1, q_max] (3D: q < 3/2, 1D: q <= 2).
double max_exponent(int dimension, const OptimizerOptions& options = {});

// Dual (Hölder) exponent q/(q-1); +inf at q = 1.
double dual_exponent(double q);

// General form for either dimension:
//   (1/||G||_1) [1 - C_q^n ||V^-|| ||G||_q],  ||G||_1 = 1/(alpha m).
double master_bound(int dimension, double q, double m, double alpha,
                    double potential_norm, const specfun::QuadratureSpec& spec = {});

// alpha m - C_q^3 Ctilde_q m^{3-3/q} ||V^-||_{q/(q-1)}, 1 <= q < 3/2.
double mass_bound_3d(const Potential& v, double m, double alpha, double q,
                     const specfun::QuadratureSpec& spec = {});
BoundReport bound_report_3d(const Potential& v, double m, double alpha, double q,
                            const specfun::QuadratureSpec& spec = {});
BoundReport optimize_mass_bound_3d(const Potential& v, double m, double alpha,
                                   const OptimizerOptions& options = {});
double binding_energy_bound_3d(const Potential& v, double m, double alpha,
                               const OptimizerOptions& options = {});

// alpha m - C_q Cbar_q m^{1-1/q} ||V^-||_{q/(q-1)}, 1 <= q <= 2.
double mass_bound_1d(const Potential& v, double m, double alpha, double q,
                     const specfun::QuadratureSpec& spec = {});
BoundReport bound_report_1d(const Potential& v, double m, double alpha, double q,
                            const specfun::QuadratureSpec& spec = {});
BoundReport optimize_mass_bound_1d(const Potential& v, double m, double alpha,
                                   const OptimizerOptions& options = {});

// max_q alpha / (C_q^3 Ctilde_q m^{2-3/q} ||v^-||_{q/(q-1)}), where v is the
// profile with unit coupling (the coupling of `v` is ignored).
CriticalCouplingBound critical_coupling_bound_3d(const Potential& v, double m,
                                                 double alpha,
                                                 const OptimizerOptions& options = {});

// Truncation procedure for confining potentials: for each q solve
//   C_q^n ||G^(n)||_q ||(C - V)_+||_{q/(q-1)} = 1
// for the cutoff C, then maximize over q. M >= C*.
TruncationResult confining_bound(const Potential& v, double m, double alpha,
                                 int dimension = 3,
                                 const OptimizerOptions& options = {});

// Largest cutoff solving the root condition at fixed q; the building block of
// confining_bound, exposed for testing.
TruncationResult confining_bound_at(const Potential& v, double m, double alpha,
                                    double q, int dimension = 3,
                                    const specfun::QuadratureSpec& spec = {});

}  // namespace salpeter::bounds
