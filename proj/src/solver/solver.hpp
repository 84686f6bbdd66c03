#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "potentials/potential.hpp"
#include "solver/discretization.hpp"
#include "solver/eigensolver.hpp"

namespace salpeter::solver {

using potentials::Potential;

enum class EigenMethod {
  Iterative,  // matrix-free preconditioned LOBPCG (default)
  Dense,      // full symmetric diagonalization, N <= 4096
};

struct SolverConfig {
  int dimension = 3;
  double alpha = 2.0;
  double mass = 1.0;
  // 0 selects 20 max(R, 1/m) (3D radial box) or twice that (1D line).
  double box_length = 0.0;
  // 0 selects a power of two resolving min(R, 1/m) with 16 points.
  int grid_points = 0;
  int max_grid_points = 131072;
  // Relative N -> 2N change accepted as converged.
  double eigen_tolerance = 1e-6;
  // Double the box while more than this probability lies in the outer half.
  double tail_tolerance = 1e-8;
  bool adapt_box = true;
  int max_box_doublings = 3;
  EigenMethod method = EigenMethod::Iterative;

  void validate() const;
};

struct SpectrumResult {
  double mass = 0.0;     // ground-state mass M
  double binding = 0.0;  // E = M - alpha m
  std::vector<double> grid;
  // u(r) = r Psi(r) up to the constant sqrt(4 pi) in 3D, Psi(x) in 1D;
  // normalized so that sum |u_j|^2 h = 1.
  std::vector<double> wavefunction;
  double refinement_delta = 0.0;  // |M(N) - M(N/2)| / max(|M|, 0.1 alpha m)
  double outer_probability = 0.0;
  int grid_points = 0;
  double box_length = 0.0;
};

struct CriticalCouplingResult {
  double coupling = 0.0;  // g at which M(g) reaches the target mass
  double target_mass = 0.0;
  double mass_residual = 0.0;  // M(coupling) - target
  std::vector<std::pair<double, double>> brackets;  // (g_lo, g_hi) per step
  double refinement_delta = 0.0;  // relative change of g under N -> 2N
  bool converged = false;
  int grid_points = 0;
  double box_length = 0.0;
};

// H = T + g W on a fixed grid, W the potential sampled at the grid points.
class Hamiltonian {
 public:
  Hamiltonian(const Potential& v, int dimension, double box_length, int grid_points,
              double alpha, double mass);

  const Discretization& grid() const { return *grid_; }
  std::size_t size() const { return potential_.size(); }
  const std::vector<double>& potential() const { return potential_; }
  void set_coupling(double g) { coupling_ = g; }
  double coupling() const { return coupling_; }

  void apply(std::span<const double> in, std::span<double> out);
  void apply_kinetic(std::span<const double> in, std::span<double> out);
  Eigen::MatrixXd dense() ;
  double rayleigh_quotient(std::span<const double> x);

  // Lowest eigenpair; `guess` (may be empty) warm-starts the iterative path.
  EigenPair ground_state(EigenMethod method, std::span<const double> guess = {});

 private:
  std::unique_ptr<Discretization> grid_;
  std::vector<double> potential_;
  double coupling_ = 1.0;
  std::vector<double> scratch_;
  std::vector<double> precond_;
};

// Default (box length, grid count) for a potential and config.
std::pair<double, int> default_grid(const Potential& v, const SolverConfig& cfg);

// Ground state of the s-wave radial problem in 3D, refined until the N -> 2N
// change is below eigen_tolerance.
SpectrumResult ground_state_3d_swave(const Potential& v, const SolverConfig& cfg);

// Ground state on a periodic line of length L centred at 0.
SpectrumResult ground_state_1d(const Potential& v, const SolverConfig& cfg);

// Dispatches on cfg.dimension.
SpectrumResult ground_state(const Potential& v, const SolverConfig& cfg);

// Coupling g for which the ground-state mass of g * v equals target_mass, by
// bisection to relative width coupling_tolerance. v's own coupling is ignored.
CriticalCouplingResult coupling_for_mass(const Potential& v, double target_mass,
                                         const SolverConfig& cfg,
                                         double coupling_tolerance = 1e-6);

// Coupling at which the ground-state mass vanishes.
CriticalCouplingResult critical_coupling_exact(const Potential& v,
                                               const SolverConfig& cfg,
                                               double coupling_tolerance = 1e-6);

}  // namespace salpeter::solver
