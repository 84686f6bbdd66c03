#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "potentials/potential.hpp"
#include "solver/solver.hpp"
#include "specfun/quadrature.hpp"

namespace salpeter::sweep {

enum class Command { Bound3d, Bound1d, Critical, Confining, Solve, Fig1, Fig2 };

Command parse_command(const std::string& name);
std::string to_string(Command c);

// "exp" | "pexp" | "sing" | "log" | "zero" | "table:<path>"
struct PotentialSpec {
  std::string kind = "exp";
  std::string table_path;

  static PotentialSpec parse(const std::string& text);
  std::string text() const;
  potentials::Potential build(double g, double range) const;
};

// "a:b:n": n points from a to b inclusive.
std::vector<double> parse_grid(const std::string& text);
// "x1,x2,...".
std::vector<double> parse_list(const std::string& text);

// Settings for one invocation. Every field can be set by key (config file
// line `key = value` or command-line flag of the same name).
class RunConfig {
 public:
  RunConfig();

  std::optional<Command> command;
  std::optional<PotentialSpec> potential;
  double coupling = 1.0;  // g
  std::optional<double> range;  // R in GeV^-1
  double mass = 1.0;      // m in GeV
  double alpha = 2.0;
  int dimension = 3;
  std::optional<double> q;  // fixed exponent for bound3d / bound1d
  std::vector<double> betas;
  std::vector<double> couplings;
  std::vector<double> masses;
  std::string output;  // empty: standard output
  double box_length = 0.0;
  int grid_points = 0;
  double eigen_tolerance = 1e-6;
  double coupling_tolerance = 1e-6;
  specfun::QuadratureSpec quadrature;

  // Recognized keys: command, potential, g, R, m, alpha, dim, q, beta-grid,
  // beta-list, g-list, m-grid, m-list, out, L, N, eigen-tol, coupling-tol,
  // quad-abs-tol, quad-rel-tol. Throws InvalidArgument on unknown keys or
  // malformed values.
  void set(const std::string& key, const std::string& value);
  // Reads `key = value` lines; '#' starts a comment.
  void load(const std::string& path);
  void parse(std::istream& in, const std::string& origin);

  void validate() const;

  // Effective values after command-dependent defaults.
  Command effective_command() const;
  PotentialSpec effective_potential() const;
  double effective_range() const;
  std::vector<double> effective_betas() const;
  std::vector<double> effective_couplings() const;
  std::vector<double> effective_masses() const;
  solver::SolverConfig solver_config(double m, int dimension) const;

  // Canonical key/value listing of the effective configuration.
  std::vector<std::pair<std::string, std::string>> echo() const;
};

}  // namespace salpeter::sweep
