/* Lower bounds and numerical ground states for the spinless Salpeter
 * equation  [alpha sqrt(p^2 + m^2) + V] Psi = M Psi.
 *
 * Units: energies and masses in GeV, lengths in GeV^-1.
 *
 * Every fallible call returns an sb_status; on failure the message is
 * available from sb_last_error_message() on the same thread until the next
 * call. Handles are opaque and owned by the caller.
 */
#ifndef SALPETER_SALPETER_H
#define SALPETER_SALPETER_H

#include <stddef.h>

#if defined(SB_BUILDING_LIBRARY)
#define SB_API __attribute__((visibility("default")))
#else
#define SB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sb_status {
  SB_OK = 0,
  SB_ERR_DOMAIN = 1,           /* argument outside the function's domain */
  SB_ERR_DIVERGENCE = 2,       /* a required norm is infinite */
  SB_ERR_CONVERGENCE = 3,      /* quadrature, eigensolver or grid refinement */
  SB_ERR_OUT_OF_CLASS = 4,     /* no admissible exponent: bound does not apply */
  SB_ERR_BRACKET = 5,          /* root or coupling could not be bracketed */
  SB_ERR_INVALID_ARGUMENT = 6,
  SB_ERR_IO = 7,
  SB_ERR_VACUOUS = 8,          /* truncation admits no finite cutoff */
  SB_ERR_INTERNAL = 99
} sb_status;

SB_API const char* sb_status_string(sb_status status);
SB_API const char* sb_last_error_message(void);
SB_API const char* sb_version(void);

/* ---- special functions and constants ---------------------------------- */

SB_API sb_status sb_bessel_k0(double x, double* out);
SB_API sb_status sb_bessel_k1(double x, double* out);
/* Sharp Young constant C_p, p >= 1 (p = INFINITY allowed). */
SB_API sb_status sb_young_constant(double p, double* out);
/* C_q C_{2q/(3q-2)}, 1 <= q <= 2. */
SB_API sb_status sb_combined_constant(double q, double* out);
/* Green's-function norm constants: ||G||_q = m^{2-3/q} Ct_q / alpha (3D,
 * 1 <= q < 3/2) and m^{-1/q} Cb_q / alpha (1D, q >= 1). */
SB_API sb_status sb_green_constant_3d(double q, double* out);
SB_API sb_status sb_green_constant_1d(double q, double* out);
SB_API sb_status sb_green_norm_3d(double q, double m, double alpha, double* out);
SB_API sb_status sb_green_norm_1d(double q, double m, double alpha, double* out);

/* ---- potentials --------------------------------------------------------- */

typedef struct sb_potential sb_potential;

typedef enum sb_potential_kind {
  SB_POTENTIAL_EXPONENTIAL = 0,       /* -g/R exp(-r/R) */
  SB_POTENTIAL_POWER_EXPONENTIAL = 1, /* -g r/R^2 exp(-r/R) */
  SB_POTENTIAL_SINGULAR = 2,          /* -g (rR)^{-1/2} exp(-r/R) */
  SB_POTENTIAL_LOGARITHMIC = 3,       /* g/R ln(r/R) */
  SB_POTENTIAL_TABULATED = 4
} sb_potential_kind;

SB_API sb_status sb_potential_create(sb_potential_kind kind, double g, double range,
                                     sb_potential** out);
/* Samples (r_i, v_i), r strictly increasing from r_0 >= 0; V = g v. */
SB_API sb_status sb_potential_from_table(const double* r, const double* v, size_t n,
                                         double g, sb_potential** out);
/* Two-column text file, '#' comments. */
SB_API sb_status sb_potential_load_table(const char* path, double g, sb_potential** out);
SB_API sb_status sb_potential_zero(sb_potential** out);
SB_API sb_status sb_potential_with_coupling(const sb_potential* v, double g,
                                            sb_potential** out);
SB_API void sb_potential_free(sb_potential* v);

SB_API sb_status sb_potential_eval(const sb_potential* v, double r, double* out);
SB_API sb_status sb_potential_infimum(const sb_potential* v, double* out);
/* ||V^-||_s over R^dim; s = INFINITY gives the supremum of V^-. */
SB_API sb_status sb_negative_part_norm(const sb_potential* v, double s, int dim,
                                       double* out);
/* ||(C - V)_+||_s over R^dim for the cutoff C. */
SB_API sb_status sb_truncated_negative_norm(const sb_potential* v, double cutoff, double s,
                                            int dim, double* out);

/* ---- bounds -------------------------------------------------------------- */

typedef struct sb_bound_report {
  int dimension;
  double alpha;
  double mass;
  double q;
  double potential_norm; /* ||V^-||_{q/(q-1)} */
  double green_norm;     /* ||G||_q */
  double mass_bound;     /* M >= mass_bound */
  double binding_bound;  /* E >= binding_bound */
  double trivial_bound;  /* alpha m - ||V^-||_inf */
  int vacuous;           /* mass_bound < 0 */
} sb_bound_report;

/* Bound at a fixed exponent q (dim 3: 1 <= q < 3/2; dim 1: 1 <= q <= 2). */
SB_API sb_status sb_bound_at(const sb_potential* v, int dim, double m, double alpha, double q,
                             sb_bound_report* out);
/* Bound maximized over q. */
SB_API sb_status sb_bound_optimize(const sb_potential* v, int dim, double m, double alpha,
                                   sb_bound_report* out);

typedef struct sb_critical_bound {
  double value;  /* lower limit on the coupling at which M vanishes */
  double q;
  int unbounded; /* no attractive part */
} sb_critical_bound;

/* 3D; the coupling of v is ignored (unit-coupling profile). */
SB_API sb_status sb_critical_coupling_bound(const sb_potential* v, double m, double alpha,
                                            sb_critical_bound* out);

typedef struct sb_truncation_result {
  int dimension;
  double q_star;
  double c_star;
  double bound; /* M >= bound */
  double residual;
  int root_found;
} sb_truncation_result;

SB_API sb_status sb_confining_bound(const sb_potential* v, int dim, double m, double alpha,
                                    sb_truncation_result* out);
SB_API sb_status sb_confining_bound_at(const sb_potential* v, int dim, double m, double alpha,
                                       double q, sb_truncation_result* out);

/* ---- numerical ground state ---------------------------------------------- */

typedef struct sb_solver_options {
  int dimension;          /* 1 or 3 (s-wave) */
  double alpha;
  double mass;
  double box_length;      /* 0: automatic */
  int grid_points;        /* 0: automatic */
  int max_grid_points;
  double eigen_tolerance; /* relative N -> 2N change */
  double tail_tolerance;
  int adapt_box;
  int dense;              /* nonzero: dense diagonalization (N <= 4096) */
} sb_solver_options;

SB_API void sb_solver_options_default(sb_solver_options* out);

typedef struct sb_result sb_result;

SB_API sb_status sb_solve_ground_state(const sb_potential* v, const sb_solver_options* options,
                                       sb_result** out);
SB_API void sb_result_free(sb_result* r);
SB_API double sb_result_mass(const sb_result* r);
SB_API double sb_result_binding(const sb_result* r);
SB_API double sb_result_refinement_delta(const sb_result* r);
SB_API int sb_result_grid_points(const sb_result* r);
SB_API double sb_result_box_length(const sb_result* r);
/* Grid coordinates and wavefunction samples (normalized, sum |u|^2 h = 1). */
SB_API size_t sb_result_size(const sb_result* r);
SB_API const double* sb_result_grid(const sb_result* r);
SB_API const double* sb_result_wavefunction(const sb_result* r);

typedef struct sb_critical_result {
  double coupling;
  double target_mass;
  double mass_residual;
  double refinement_delta;
  int converged;
  int grid_points;
  double box_length;
  size_t bisection_steps;
} sb_critical_result;

/* Coupling at which the ground-state mass of g v vanishes. */
SB_API sb_status sb_critical_coupling_exact(const sb_potential* v,
                                            const sb_solver_options* options,
                                            double coupling_tolerance,
                                            sb_critical_result* out);
/* Coupling at which the ground-state mass of g v equals target_mass. */
SB_API sb_status sb_coupling_for_mass(const sb_potential* v, const sb_solver_options* options,
                                      double target_mass, double coupling_tolerance,
                                      sb_critical_result* out);

/* ---- configured runs (the command-line front end) ----------------------- */

typedef struct sb_config sb_config;

SB_API sb_status sb_config_create(sb_config** out);
SB_API void sb_config_free(sb_config* c);
/* Keys: command, potential, g, R, m, alpha, dim, q, beta-grid, beta-list,
 * g-list, m-grid, m-list, out, L, N, eigen-tol, coupling-tol, quad-abs-tol,
 * quad-rel-tol. */
SB_API sb_status sb_config_set(sb_config* c, const char* key, const char* value);
SB_API sb_status sb_config_load(sb_config* c, const char* path);

typedef struct sb_run_summary {
  size_t rows;
  size_t failures;
} sb_run_summary;

/* Runs the configured command; the report (and CSV without `out`) goes to
 * standard output. */
SB_API sb_status sb_run(const sb_config* c, sb_run_summary* summary);
/* As sb_run, returning the report text; release it with sb_string_free. */
SB_API sb_status sb_run_to_string(const sb_config* c, char** text, sb_run_summary* summary);
SB_API void sb_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* SALPETER_SALPETER_H */
