#include "salpeter/salpeter.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "bounds/bounds.hpp"
#include "common/error.hpp"
#include "potentials/norms.hpp"
#include "potentials/potential.hpp"
#include "potentials/table.hpp"
#include "solver/solver.hpp"
#include "specfun/bessel.hpp"
#include "specfun/constants.hpp"
#include "sweep/config.hpp"
#include "sweep/sweep.hpp"

using namespace salpeter;

struct sb_potential {
  potentials::Potential v;
};

struct sb_result {
  solver::SpectrumResult r;
};

struct sb_config {
  sweep::RunConfig c;
};

namespace {

thread_local std::string last_error;

void set_error(const std::string& msg) { last_error = msg; }

// Runs f, translating exceptions into status codes.
template <class F>
sb_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return SB_OK;
  } catch (const Error& e) {
    set_error(e.what());
    return static_cast<sb_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return SB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return SB_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return SB_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(std::string(what) + " must not be null");
}

solver::SolverConfig to_solver(const sb_solver_options* o) {
  need(o, "solver options");
  solver::SolverConfig c;
  c.dimension = o->dimension;
  c.alpha = o->alpha;
  c.mass = o->mass;
  c.box_length = o->box_length;
  c.grid_points = o->grid_points;
  c.max_grid_points = o->max_grid_points;
  c.eigen_tolerance = o->eigen_tolerance;
  c.tail_tolerance = o->tail_tolerance;
  c.adapt_box = o->adapt_box != 0;
  c.method = o->dense ? solver::EigenMethod::Dense : solver::EigenMethod::Iterative;
  return c;
}

void fill(const bounds::BoundReport& r, sb_bound_report* out) {
  out->dimension = r.dimension;
  out->alpha = r.alpha;
  out->mass = r.mass;
  out->q = r.q;
  out->potential_norm = r.potential_norm;
  out->green_norm = r.green_norm;
  out->mass_bound = r.mass_bound;
  out->binding_bound = r.binding_bound;
  out->trivial_bound = r.trivial_bound;
  out->vacuous = r.vacuous ? 1 : 0;
}

void fill(const bounds::TruncationResult& r, sb_truncation_result* out) {
  out->dimension = r.dimension;
  out->q_star = r.q_star;
  out->c_star = r.c_star;
  out->bound = r.bound;
  out->residual = r.residual;
  out->root_found = r.root_found ? 1 : 0;
}

void fill(const solver::CriticalCouplingResult& r, sb_critical_result* out) {
  out->coupling = r.coupling;
  out->target_mass = r.target_mass;
  out->mass_residual = r.mass_residual;
  out->refinement_delta = r.refinement_delta;
  out->converged = r.converged ? 1 : 0;
  out->grid_points = r.grid_points;
  out->box_length = r.box_length;
  out->bisection_steps = r.brackets.size();
}

void check_dim(int dim) {
  if (dim != 1 && dim != 3) throw InvalidArgument("dimension must be 1 or 3");
}

template <class F>
sb_status scalar(double* out, F&& f) {
  return guard([&] {
    need(out, "output");
    *out = f();
  });
}

}  // namespace

extern "C" {

const char* sb_status_string(sb_status status) {
  switch (status) {
    case SB_OK: return "ok";
    case SB_ERR_DOMAIN: return "domain error";
    case SB_ERR_DIVERGENCE: return "norm diverges";
    case SB_ERR_CONVERGENCE: return "no convergence";
    case SB_ERR_OUT_OF_CLASS: return "potential out of class";
    case SB_ERR_BRACKET: return "bracketing failed";
    case SB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SB_ERR_IO: return "i/o error";
    case SB_ERR_VACUOUS: return "vacuous bound";
    case SB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* sb_last_error_message(void) { return last_error.c_str(); }

const char* sb_version(void) { return "1.0.0"; }

sb_status sb_bessel_k0(double x, double* out) {
  return scalar(out, [&] { return specfun::bessel_k0(x); });
}

sb_status sb_bessel_k1(double x, double* out) {
  return scalar(out, [&] { return specfun::bessel_k1(x); });
}

sb_status sb_young_constant(double p, double* out) {
  return scalar(out, [&] { return specfun::young_constant(p); });
}

sb_status sb_combined_constant(double q, double* out) {
  return scalar(out, [&] { return specfun::combined_constant(q); });
}

sb_status sb_green_constant_3d(double q, double* out) {
  return scalar(out, [&] { return specfun::green_constant_3d(q); });
}

sb_status sb_green_constant_1d(double q, double* out) {
  return scalar(out, [&] { return specfun::green_constant_1d(q); });
}

sb_status sb_green_norm_3d(double q, double m, double alpha, double* out) {
  return scalar(out, [&] { return specfun::green_norm_3d(q, m, alpha); });
}

sb_status sb_green_norm_1d(double q, double m, double alpha, double* out) {
  return scalar(out, [&] { return specfun::green_norm_1d(q, m, alpha); });
}

sb_status sb_potential_create(sb_potential_kind kind, double g, double range,
                              sb_potential** out) {
  return guard([&] {
    need(out, "output");
    using potentials::Potential;
    switch (kind) {
      case SB_POTENTIAL_EXPONENTIAL:
        *out = new sb_potential{Potential::exponential(g, range)};
        return;
      case SB_POTENTIAL_POWER_EXPONENTIAL:
        *out = new sb_potential{Potential::power_exponential(g, range)};
        return;
      case SB_POTENTIAL_SINGULAR:
        *out = new sb_potential{Potential::singular(g, range)};
        return;
      case SB_POTENTIAL_LOGARITHMIC:
        *out = new sb_potential{Potential::logarithmic(g, range)};
        return;
      case SB_POTENTIAL_TABULATED:
        throw InvalidArgument("use sb_potential_from_table for tabulated potentials");
    }
    throw InvalidArgument("unknown potential kind");
  });
}

sb_status sb_potential_from_table(const double* r, const double* v, size_t n, double g,
                                  sb_potential** out) {
  return guard([&] {
    need(out, "output");
    need(r, "radii");
    need(v, "values");
    auto table = std::make_shared<const potentials::Table>(std::vector<double>(r, r + n),
                                                           std::vector<double>(v, v + n));
    *out = new sb_potential{potentials::Potential::tabulated(std::move(table), g)};
  });
}

sb_status sb_potential_load_table(const char* path, double g, sb_potential** out) {
  return guard([&] {
    need(out, "output");
    need(path, "path");
    auto table = std::make_shared<const potentials::Table>(potentials::Table::load(path));
    *out = new sb_potential{potentials::Potential::tabulated(std::move(table), g)};
  });
}

sb_status sb_potential_zero(sb_potential** out) {
  return guard([&] {
    need(out, "output");
    *out = new sb_potential{potentials::Potential::zero()};
  });
}

sb_status sb_potential_with_coupling(const sb_potential* v, double g, sb_potential** out) {
  return guard([&] {
    need(v, "potential");
    need(out, "output");
    if (!(g >= 0.0)) throw InvalidArgument("coupling must be >= 0");
    *out = new sb_potential{v->v.with_coupling(g)};
  });
}

void sb_potential_free(sb_potential* v) { delete v; }

sb_status sb_potential_eval(const sb_potential* v, double r, double* out) {
  return scalar(out, [&] {
    need(v, "potential");
    return v->v(r);
  });
}

sb_status sb_potential_infimum(const sb_potential* v, double* out) {
  return scalar(out, [&] {
    need(v, "potential");
    return v->v.infimum();
  });
}

sb_status sb_negative_part_norm(const sb_potential* v, double s, int dim, double* out) {
  return scalar(out, [&] {
    need(v, "potential");
    check_dim(dim);
    return potentials::negative_part_norm(v->v, s, dim);
  });
}

sb_status sb_truncated_negative_norm(const sb_potential* v, double cutoff, double s, int dim,
                                     double* out) {
  return scalar(out, [&] {
    need(v, "potential");
    check_dim(dim);
    return potentials::truncated_negative_norm({v->v, cutoff}, s, dim);
  });
}

sb_status sb_bound_at(const sb_potential* v, int dim, double m, double alpha, double q,
                      sb_bound_report* out) {
  return guard([&] {
    need(v, "potential");
    need(out, "output");
    check_dim(dim);
    fill(dim == 3 ? bounds::bound_report_3d(v->v, m, alpha, q)
                  : bounds::bound_report_1d(v->v, m, alpha, q),
         out);
  });
}

sb_status sb_bound_optimize(const sb_potential* v, int dim, double m, double alpha,
                            sb_bound_report* out) {
  return guard([&] {
    need(v, "potential");
    need(out, "output");
    check_dim(dim);
    fill(dim == 3 ? bounds::optimize_mass_bound_3d(v->v, m, alpha)
                  : bounds::optimize_mass_bound_1d(v->v, m, alpha),
         out);
  });
}

sb_status sb_critical_coupling_bound(const sb_potential* v, double m, double alpha,
                                     sb_critical_bound* out) {
  return guard([&] {
    need(v, "potential");
    need(out, "output");
    const auto b = bounds::critical_coupling_bound_3d(v->v, m, alpha);
    out->value = b.value;
    out->q = b.q;
    out->unbounded = b.unbounded ? 1 : 0;
  });
}

sb_status sb_confining_bound(const sb_potential* v, int dim, double m, double alpha,
                             sb_truncation_result* out) {
  return guard([&] {
    need(v, "potential");
    need(out, "output");
    check_dim(dim);
    fill(bounds::confining_bound(v->v, m, alpha, dim), out);
  });
}

sb_status sb_confining_bound_at(const sb_potential* v, int dim, double m, double alpha,
                                double q, sb_truncation_result* out) {
  return guard([&] {
    need(v, "potential");
    need(out, "output");
    check_dim(dim);
    fill(bounds::confining_bound_at(v->v, m, alpha, q, dim), out);
  });
}

void sb_solver_options_default(sb_solver_options* out) {
  if (out == nullptr) return;
  const solver::SolverConfig d;
  out->dimension = d.dimension;
  out->alpha = d.alpha;
  out->mass = d.mass;
  out->box_length = d.box_length;
  out->grid_points = d.grid_points;
  out->max_grid_points = d.max_grid_points;
  out->eigen_tolerance = d.eigen_tolerance;
  out->tail_tolerance = d.tail_tolerance;
  out->adapt_box = d.adapt_box ? 1 : 0;
  out->dense = d.method == solver::EigenMethod::Dense ? 1 : 0;
}

sb_status sb_solve_ground_state(const sb_potential* v, const sb_solver_options* options,
                                sb_result** out) {
  return guard([&] {
    need(v, "potential");
    need(out, "output");
    *out = new sb_result{solver::ground_state(v->v, to_solver(options))};
  });
}

void sb_result_free(sb_result* r) { delete r; }
double sb_result_mass(const sb_result* r) { return r ? r->r.mass : NAN; }
double sb_result_binding(const sb_result* r) { return r ? r->r.binding : NAN; }
double sb_result_refinement_delta(const sb_result* r) {
  return r ? r->r.refinement_delta : NAN;
}
int sb_result_grid_points(const sb_result* r) { return r ? r->r.grid_points : 0; }
double sb_result_box_length(const sb_result* r) { return r ? r->r.box_length : NAN; }
size_t sb_result_size(const sb_result* r) { return r ? r->r.grid.size() : 0; }
const double* sb_result_grid(const sb_result* r) { return r ? r->r.grid.data() : nullptr; }
const double* sb_result_wavefunction(const sb_result* r) {
  return r ? r->r.wavefunction.data() : nullptr;
}

sb_status sb_critical_coupling_exact(const sb_potential* v, const sb_solver_options* options,
                                     double coupling_tolerance, sb_critical_result* out) {
  return guard([&] {
    need(v, "potential");
    need(out, "output");
    fill(solver::critical_coupling_exact(v->v, to_solver(options), coupling_tolerance), out);
  });
}

sb_status sb_coupling_for_mass(const sb_potential* v, const sb_solver_options* options,
                               double target_mass, double coupling_tolerance,
                               sb_critical_result* out) {
  return guard([&] {
    need(v, "potential");
    need(out, "output");
    fill(solver::coupling_for_mass(v->v, target_mass, to_solver(options), coupling_tolerance),
         out);
  });
}

sb_status sb_config_create(sb_config** out) {
  return guard([&] {
    need(out, "output");
    *out = new sb_config{};
  });
}

void sb_config_free(sb_config* c) { delete c; }

sb_status sb_config_set(sb_config* c, const char* key, const char* value) {
  return guard([&] {
    need(c, "config");
    need(key, "key");
    need(value, "value");
    c->c.set(key, value);
  });
}

sb_status sb_config_load(sb_config* c, const char* path) {
  return guard([&] {
    need(c, "config");
    need(path, "path");
    c->c.load(path);
  });
}

sb_status sb_run(const sb_config* c, sb_run_summary* summary) {
  return guard([&] {
    need(c, "config");
    const auto s = sweep::run(c->c, std::cout);
    std::cout.flush();
    if (summary) *summary = {s.rows, s.failures};
  });
}

sb_status sb_run_to_string(const sb_config* c, char** text, sb_run_summary* summary) {
  return guard([&] {
    need(c, "config");
    need(text, "output");
    std::ostringstream os;
    const auto s = sweep::run(c->c, os);
    const std::string str = os.str();
    char* buf = static_cast<char*>(std::malloc(str.size() + 1));
    if (buf == nullptr) throw std::bad_alloc();
    std::memcpy(buf, str.c_str(), str.size() + 1);
    *text = buf;
    if (summary) *summary = {s.rows, s.failures};
  });
}

void sb_string_free(char* s) { std::free(s); }

}  // extern "C"
