#pragma once

#include <span>
#include <vector>

namespace salpeter::solver {

// Uniform grid on which alpha sqrt(p^2 + m^2) is diagonal after a fast
// transform.
//
//  dim 3: reduced radial function u(r) = r Psi(r) on r_j = j L/N,
//         j = 1..N-1, Dirichlet at 0 and L; sine modes p_k = k pi / L.
//  dim 1: periodic grid x_j = -L/2 + (j + 1/2) L/N, j = 0..N-1, symmetric
//         about and excluding the origin; plane-wave momenta
//         p_k = 2 pi k / L.
//
// Instances own transform scratch space and are not safe for concurrent use;
// create one per thread.
class Discretization {
 public:
  Discretization(int dimension, double box_length, int grid_points, double alpha,
                 double mass);
  ~Discretization();
  Discretization(const Discretization&) = delete;
  Discretization& operator=(const Discretization&) = delete;

  int dimension() const { return dim_; }
  int grid_points() const { return n_; }
  double box_length() const { return length_; }
  double spacing() const { return length_ / n_; }
  double alpha() const { return alpha_; }
  double mass() const { return mass_; }

  // Number of unknowns (N - 1 in 3D, N in 1D).
  std::size_t size() const { return coords_.size(); }
  // Radii (3D) or positions (1D) of the unknowns.
  const std::vector<double>& coordinates() const { return coords_; }
  // Kinetic eigenvalues in transform order.
  const std::vector<double>& kinetic_diagonal() const { return kinetic_; }
  double min_kinetic() const;

  // out = F^{-1} diag(d) F in, F the grid transform; d is indexed like
  // kinetic_diagonal().
  void apply_spectral(std::span<const double> d, std::span<const double> in,
                      std::span<double> out);
  void apply_kinetic(std::span<const double> in, std::span<double> out);

  // Grid vector of the k-th transform mode, normalized to unit l2 norm:
  // sin(k pi j / N) in 3D (k >= 1); cos(2 pi k x / L) in 1D (k >= 0).
  std::vector<double> mode(int k) const;

 private:
  int dim_;
  int n_;
  double length_;
  double alpha_;
  double mass_;
  std::vector<double> coords_;
  std::vector<double> kinetic_;
  double* buffer_ = nullptr;
  void* forward_ = nullptr;
  void* backward_ = nullptr;
};

}  // namespace salpeter::solver
