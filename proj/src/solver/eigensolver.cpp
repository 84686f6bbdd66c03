#include "solver/eigensolver.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "common/error.hpp"

namespace salpeter::solver {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void axpy(double s, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += s * x[i];
}

void scale(std::span<double> x, double s) {
  for (double& v : x) v *= s;
}

}  // namespace

EigenPair lowest_eigenpair_lobpcg(const LinearMap& apply_h,
                                  const LinearMap& apply_preconditioner,
                                  std::vector<double> initial,
                                  const LobpcgOptions& options) {
  const std::size_t n = initial.size();
  using Vec = std::vector<double>;

  Vec x = std::move(initial);
  const double x_norm = norm(x);
  if (!(x_norm > 0.0)) throw InvalidArgument("lobpcg: initial vector is zero");
  scale(x, 1.0 / x_norm);
  Vec hx(n);
  apply_h(x, hx);

  Vec p;  // search direction, empty on the first pass
  Vec r(n), w(n);
  double lambda = dot(x, hx);

  for (int it = 0; it < options.max_iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) r[i] = hx[i] - lambda * x[i];
    const double rn = norm(r);
    const double target =
        options.residual_tolerance * std::max(std::abs(lambda), options.scale);
    if (rn <= target) {
      apply_h(x, hx);
      lambda = dot(x, hx);
      for (std::size_t i = 0; i < n; ++i) r[i] = hx[i] - lambda * x[i];
      const double exact = norm(r);
      if (exact <= target) return {lambda, std::move(x), it, exact};
    }

    apply_preconditioner(r, w);

    // Orthonormal basis [x, w, p] by two passes of modified Gram-Schmidt;
    // nearly dependent directions are dropped.
    std::vector<Vec> basis{x};
    std::vector<Vec*> candidates{&w};
    if (!p.empty()) candidates.push_back(&p);
    for (Vec* c : candidates) {
      Vec v = *c;
      const double before = norm(v);
      if (!(before > 0.0)) continue;
      for (int pass = 0; pass < 2; ++pass) {
        for (const Vec& b : basis) axpy(-dot(b, v), b, v);
      }
      const double after = norm(v);
      if (after <= 1e-12 * before) continue;
      scale(v, 1.0 / after);
      basis.push_back(std::move(v));
    }

    const std::size_t k = basis.size();
    std::vector<Vec> images(k, Vec(n));
    images[0] = hx;
    for (std::size_t i = 1; i < k; ++i) apply_h(basis[i], images[i]);

    Eigen::MatrixXd a(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i; j < k; ++j) {
        const double v = 0.5 * (dot(basis[i], images[j]) + dot(basis[j], images[i]));
        a(i, j) = a(j, i) = v;
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(a);
    const Eigen::VectorXd c = small.eigenvectors().col(0);

    Vec nx(n, 0.0), nhx(n, 0.0), np(n, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
      axpy(c(i), basis[i], nx);
      axpy(c(i), images[i], nhx);
      if (i > 0) axpy(c(i), basis[i], np);
    }
    const double nn = norm(nx);
    scale(nx, 1.0 / nn);
    scale(nhx, 1.0 / nn);
    x = std::move(nx);
    hx = std::move(nhx);
    p = std::move(np);
    // The recombined image drifts from H x by rounding; refresh it.
    if (it % 16 == 15) apply_h(x, hx);
    lambda = dot(x, hx);
  }
  std::ostringstream os;
  os << "lobpcg: no convergence after " << options.max_iterations << " iterations";
  throw ConvergenceError(os.str());
}

EigenPair lowest_eigenpair_dense(const Eigen::MatrixXd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  if (es.info() != Eigen::Success) {
    throw ConvergenceError("dense eigensolver failed");
  }
  EigenPair out;
  out.value = es.eigenvalues()(0);
  const Eigen::VectorXd v = es.eigenvectors().col(0);
  out.vector.assign(v.data(), v.data() + v.size());
  const Eigen::VectorXd res = h * v - out.value * v;
  out.residual = res.norm();
  return out;
}

}  // namespace salpeter::solver
