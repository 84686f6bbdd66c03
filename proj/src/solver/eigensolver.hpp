#pragma once

#include <Eigen/Dense>

#include <functional>
#include <span>
#include <vector>

namespace salpeter::solver {

using LinearMap = std::function<void(std::span<const double>, std::span<double>)>;

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;  // unit l2 norm
  int iterations = 0;
  double residual = 0.0;  // ||H x - value x||
};

struct LobpcgOptions {
  double residual_tolerance = 1e-10;  // relative to max(|value|, scale)
  double scale = 1.0;
  int max_iterations = 5000;
};

// Lowest eigenpair of a symmetric operator by single-vector LOBPCG with a
// symmetric positive definite preconditioner. `initial` must be nonzero.
// Throws ConvergenceError when the residual target is not reached.
EigenPair lowest_eigenpair_lobpcg(const LinearMap& apply_h,
                                  const LinearMap& apply_preconditioner,
                                  std::vector<double> initial,
                                  const LobpcgOptions& options = {});

// Lowest eigenpair of a dense symmetric matrix.
EigenPair lowest_eigenpair_dense(const Eigen::MatrixXd& h);

}  // namespace salpeter::solver
