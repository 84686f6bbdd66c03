#include "sweep/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bounds/bounds.hpp"
#include "common/error.hpp"
#include "solver/solver.hpp"

namespace salpeter::sweep {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

const char* units_note(Command c) {
  switch (c) {
    case Command::Fig1:
      return "beta = m R (dimensionless); couplings g dimensionless (V = g/R f(r/R))";
    case Command::Fig2:
      return "g dimensionless; m, M_exact, M_lower_bound in GeV; R in GeV^-1";
    case Command::Solve:
      return "masses and energies in GeV; L in GeV^-1";
    default:
      return "masses, energies and norms in GeV-based units; lengths in GeV^-1";
  }
}

void write_csv(std::ostream& os, const RunConfig& cfg, const Table& t) {
  os << "# salpeter-bounds " << to_string(cfg.effective_command()) << "\n";
  os << "# schema-version: " << kSchemaVersion << "\n";
  os << "# units: " << units_note(cfg.effective_command()) << "\n";
  for (const auto& [k, v] : cfg.echo()) os << "# config: " << k << " = " << v << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    os << (i ? "," : "") << t.columns[i];
  }
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << "\n";
  }
}

void emit_csv(const RunConfig& cfg, const Table& t, std::ostream& report) {
  if (cfg.output.empty()) {
    write_csv(report, cfg, t);
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw IoError("cannot write '" + cfg.output + "'");
  write_csv(f, cfg, t);
  if (!f) throw IoError("write failed for '" + cfg.output + "'");
}

void line(std::ostream& os, const std::string& name, const std::string& value,
          const std::string& unit = "") {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%-24s", name.c_str());
  os << buf << value;
  if (!unit.empty()) os << " " << unit;
  os << "\n";
}

void header(std::ostream& os, const RunConfig& cfg) {
  for (const auto& [k, v] : cfg.echo()) line(os, k, v);
  os << "\n";
}

bounds::OptimizerOptions optimizer(const RunConfig& cfg) {
  bounds::OptimizerOptions o;
  o.quadrature = cfg.quadrature;
  return o;
}

std::string error_status(const std::exception& e) { return std::string("error: ") + e.what(); }

// ---- single-point commands ------------------------------------------------

RunSummary run_bound(const RunConfig& cfg, std::ostream& os, int dim) {
  const auto v = cfg.effective_potential().build(cfg.coupling, cfg.effective_range());
  bounds::BoundReport r;
  if (cfg.q) {
    r = dim == 3 ? bounds::bound_report_3d(v, cfg.mass, cfg.alpha, *cfg.q, cfg.quadrature)
                 : bounds::bound_report_1d(v, cfg.mass, cfg.alpha, *cfg.q, cfg.quadrature);
  } else {
    r = dim == 3 ? bounds::optimize_mass_bound_3d(v, cfg.mass, cfg.alpha, optimizer(cfg))
                 : bounds::optimize_mass_bound_1d(v, cfg.mass, cfg.alpha, optimizer(cfg));
  }
  header(os, cfg);
  line(os, "q", num(r.q), cfg.q ? "(fixed)" : "(optimized)");
  line(os, "||V^-||_{q/(q-1)}", num(r.potential_norm), "GeV^{1-n(q-1)/q}");
  line(os, "||G||_q", num(r.green_norm), "GeV^{n-1-n/q}");
  line(os, "M >=", num(r.mass_bound), "GeV");
  line(os, "E >=", num(r.binding_bound), "GeV");
  line(os, "q -> 1 bound", num(r.trivial_bound), "GeV");
  if (r.vacuous) line(os, "note", "bound is negative; only M >= 0 is informative");
  if (!cfg.output.empty()) {
    Table t{{"potential", "g", "R", "m", "alpha", "dim", "q", "potential_norm", "green_norm",
             "mass_bound", "binding_bound", "trivial_bound", "vacuous"},
            {}};
    t.rows.push_back({cfg.effective_potential().text(), num(cfg.coupling),
                      num(cfg.effective_range()), num(cfg.mass), num(cfg.alpha),
                      std::to_string(dim), num(r.q), num(r.potential_norm), num(r.green_norm),
                      num(r.mass_bound), num(r.binding_bound), num(r.trivial_bound),
                      r.vacuous ? "1" : "0"});
    emit_csv(cfg, t, os);
  }
  return {1, 0};
}

RunSummary run_critical(const RunConfig& cfg, std::ostream& os) {
  const auto shape = cfg.effective_potential().build(1.0, cfg.effective_range());
  const auto b = bounds::critical_coupling_bound_3d(shape, cfg.mass, cfg.alpha, optimizer(cfg));
  const auto e = solver::critical_coupling_exact(shape, cfg.solver_config(cfg.mass, 3),
                                                 cfg.coupling_tolerance);
  header(os, cfg);
  line(os, "gc lower bound", num(b.value));
  line(os, "q (optimal)", num(b.q));
  line(os, "gc exact", num(e.coupling));
  line(os, "ratio bound/exact", num(b.value / e.coupling));
  line(os, "refinement delta", num(e.refinement_delta));
  line(os, "grid converged", e.converged ? "yes" : "no");
  line(os, "bisection steps", std::to_string(e.brackets.size()));
  line(os, "M at gc", num(e.mass_residual), "GeV");
  line(os, "N", std::to_string(e.grid_points));
  line(os, "L", num(e.box_length), "GeV^-1");
  if (!cfg.output.empty()) {
    Table t{{"potential", "R", "m", "alpha", "gc_exact", "gc_lower_bound", "ratio", "q_opt",
             "exact_refinement_delta", "converged"},
            {}};
    t.rows.push_back({cfg.effective_potential().text(), num(cfg.effective_range()),
                      num(cfg.mass), num(cfg.alpha), num(e.coupling), num(b.value),
                      num(b.value / e.coupling), num(b.q), num(e.refinement_delta),
                      e.converged ? "1" : "0"});
    emit_csv(cfg, t, os);
  }
  return {1, 0};
}

RunSummary run_confining(const RunConfig& cfg, std::ostream& os) {
  const auto v = cfg.effective_potential().build(cfg.coupling, cfg.effective_range());
  const auto r = bounds::confining_bound(v, cfg.mass, cfg.alpha, cfg.dimension, optimizer(cfg));
  header(os, cfg);
  line(os, "q*", num(r.q_star));
  line(os, "C*", num(r.c_star), "GeV");
  line(os, "M >=", num(r.bound), "GeV");
  line(os, "residual", num(r.residual));
  line(os, "root found", r.root_found ? "yes" : "no");
  if (!cfg.output.empty()) {
    Table t{{"potential", "g", "R", "m", "alpha", "dim", "q_star", "c_star", "mass_bound",
             "residual", "root_found"},
            {}};
    t.rows.push_back({cfg.effective_potential().text(), num(cfg.coupling),
                      num(cfg.effective_range()), num(cfg.mass), num(cfg.alpha),
                      std::to_string(cfg.dimension), num(r.q_star), num(r.c_star),
                      num(r.bound), num(r.residual), r.root_found ? "1" : "0"});
    emit_csv(cfg, t, os);
  }
  return {1, 0};
}

RunSummary run_solve(const RunConfig& cfg, std::ostream& os) {
  const auto v = cfg.effective_potential().build(cfg.coupling, cfg.effective_range());
  const auto r = solver::ground_state(v, cfg.solver_config(cfg.mass, cfg.dimension));
  header(os, cfg);
  line(os, "M", num(r.mass), "GeV");
  line(os, "E = M - alpha m", num(r.binding), "GeV");
  line(os, "refinement delta", num(r.refinement_delta));
  line(os, "outer probability", num(r.outer_probability));
  line(os, "N", std::to_string(r.grid_points));
  line(os, "L", num(r.box_length), "GeV^-1");
  if (!cfg.output.empty()) {
    Table t{{"potential", "g", "R", "m", "alpha", "dim", "M", "E", "refinement_delta", "N",
             "L"},
            {}};
    t.rows.push_back({cfg.effective_potential().text(), num(cfg.coupling),
                      num(cfg.effective_range()), num(cfg.mass), num(cfg.alpha),
                      std::to_string(cfg.dimension), num(r.mass), num(r.binding),
                      num(r.refinement_delta), std::to_string(r.grid_points),
                      num(r.box_length)});
    emit_csv(cfg, t, os);
  }
  return {1, 0};
}

// ---- sweeps ---------------------------------------------------------------

struct RowResult {
  std::vector<std::string> cells;
  bool failed = false;
};

RunSummary finish_sweep(const RunConfig& cfg, std::vector<std::string> columns,
                        std::vector<RowResult>& results, std::ostream& os) {
  Table t{std::move(columns), {}};
  RunSummary s;
  for (auto& r : results) {
    t.rows.push_back(std::move(r.cells));
    ++s.rows;
    if (r.failed) ++s.failures;
  }
  emit_csv(cfg, t, os);
  return s;
}

RunSummary run_fig1(const RunConfig& cfg, std::ostream& os) {
  std::vector<PotentialSpec> kinds;
  if (cfg.potential) {
    kinds.push_back(*cfg.potential);
  } else {
    for (const char* k : {"exp", "pexp", "sing"}) kinds.push_back(PotentialSpec::parse(k));
  }
  const auto betas = cfg.effective_betas();
  const double range = cfg.effective_range();
  struct Point {
    PotentialSpec kind;
    double beta;
  };
  std::vector<Point> points;
  for (const auto& k : kinds) {
    for (double b : betas) points.push_back({k, b});
  }

  std::vector<RowResult> results(points.size());
  parallel_for(points.size(), worker_count(), [&](std::size_t i) {
    const Point& p = points[i];
    const double m = p.beta / range;
    double exact = kNaN, bound = kNaN, q = kNaN, delta = kNaN;
    std::string status = "ok";
    bool failed = false;
    try {
      const auto shape = p.kind.build(1.0, range);
      const auto b = bounds::critical_coupling_bound_3d(shape, m, cfg.alpha, optimizer(cfg));
      bound = b.value;
      q = b.q;
      const auto e =
          solver::critical_coupling_exact(shape, cfg.solver_config(m, 3), cfg.coupling_tolerance);
      exact = e.coupling;
      delta = e.refinement_delta;
      if (!e.converged) status = "unconverged";
    } catch (const std::exception& e) {
      status = error_status(e);
      failed = true;
    }
    results[i] = {{p.kind.text(), num(p.beta), num(exact), num(bound), num(bound / exact),
                   num(q), num(delta), status},
                  failed};
  });
  return finish_sweep(cfg,
                      {"potential", "beta", "gc_exact", "gc_lower_bound", "ratio", "q_opt",
                       "exact_refinement_delta", "status"},
                      results, os);
}

RunSummary run_fig2(const RunConfig& cfg, std::ostream& os) {
  const auto spec = cfg.effective_potential();
  const auto couplings = cfg.effective_couplings();
  const auto masses = cfg.effective_masses();
  const double range = cfg.effective_range();
  std::vector<std::pair<double, double>> points;
  for (double g : couplings) {
    for (double m : masses) points.emplace_back(g, m);
  }

  std::vector<RowResult> results(points.size());
  parallel_for(points.size(), worker_count(), [&](std::size_t i) {
    const auto [g, m] = points[i];
    double exact = kNaN, bound = kNaN, q = kNaN, residual = kNaN;
    std::string status = "ok";
    bool failed = false;
    try {
      const auto v = spec.build(g, range);
      const auto t = bounds::confining_bound(v, m, cfg.alpha, 3, optimizer(cfg));
      bound = t.bound;
      q = t.q_star;
      residual = t.residual;
      exact = solver::ground_state_3d_swave(v, cfg.solver_config(m, 3)).mass;
      if (!t.root_found) status = "no-root";
    } catch (const std::exception& e) {
      status = error_status(e);
      failed = true;
    }
    results[i] = {{num(g), num(m), num(m * range), num(exact), num(bound), num(q),
                   num(residual), status},
                  failed};
  });
  return finish_sweep(
      cfg, {"g", "m", "beta", "M_exact", "M_lower_bound", "q_star", "residual", "status"},
      results, os);
}

}  // namespace

int worker_count() {
  if (const char* env = std::getenv("SALPETER_WORKERS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1) return static_cast<int>(std::min(n, 1024L));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& task) {
  const std::size_t threads = std::min<std::size_t>(std::max(workers, 1), n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) task(i);
    });
  }
  for (auto& th : pool) th.join();
}

RunSummary run(const RunConfig& cfg, std::ostream& report) {
  cfg.validate();
  switch (cfg.effective_command()) {
    case Command::Bound3d: return run_bound(cfg, report, 3);
    case Command::Bound1d: return run_bound(cfg, report, 1);
    case Command::Critical: return run_critical(cfg, report);
    case Command::Confining: return run_confining(cfg, report);
    case Command::Solve: return run_solve(cfg, report);
    case Command::Fig1: return run_fig1(cfg, report);
    case Command::Fig2: return run_fig2(cfg, report);
  }
  throw InvalidArgument("unknown command");
}

}  // namespace salpeter::sweep
