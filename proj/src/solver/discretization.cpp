#include "solver/discretization.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include "common/error.hpp"

namespace salpeter::solver {

namespace {

// The FFTW planner is not reentrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Discretization::Discretization(int dimension, double box_length, int grid_points,
                               double alpha, double mass)
    : dim_(dimension), n_(grid_points), length_(box_length), alpha_(alpha), mass_(mass) {
  if (dim_ != 1 && dim_ != 3) throw InvalidArgument("solver: dimension must be 1 or 3");
  if (n_ < 16) throw InvalidArgument("solver: grid count N must be >= 16");
  if (!(length_ > 0.0) || !std::isfinite(length_)) {
    throw InvalidArgument("solver: box length must be positive");
  }
  if (!(alpha_ > 0.0)) throw InvalidArgument("solver: alpha must be positive");
  if (!(mass_ > 0.0)) throw InvalidArgument("solver: mass must be positive");

  const double h = length_ / n_;
  const std::size_t unknowns = dim_ == 3 ? n_ - 1 : n_;
  coords_.resize(unknowns);
  kinetic_.resize(unknowns);
  if (dim_ == 3) {
    for (std::size_t j = 0; j < unknowns; ++j) {
      coords_[j] = (j + 1) * h;
      const double p = (j + 1) * std::numbers::pi / length_;
      kinetic_[j] = alpha_ * std::sqrt(p * p + mass_ * mass_);
    }
  } else {
    // Halfcomplex order: r_0 .. r_{N/2}, i_{(N+1)/2-1} .. i_1.
    for (std::size_t j = 0; j < unknowns; ++j) {
      coords_[j] = -0.5 * length_ + (j + 0.5) * h;
      const std::size_t k = j <= unknowns / 2 ? j : unknowns - j;
      const double p = 2.0 * std::numbers::pi * k / length_;
      kinetic_[j] = alpha_ * std::sqrt(p * p + mass_ * mass_);
    }
  }

  std::lock_guard lock(planner_mutex());
  buffer_ = fftw_alloc_real(unknowns);
  const int n = static_cast<int>(unknowns);
  if (dim_ == 3) {
    forward_ = fftw_plan_r2r_1d(n, buffer_, buffer_, FFTW_RODFT00, FFTW_ESTIMATE);
    backward_ = forward_;
  } else {
    forward_ = fftw_plan_r2r_1d(n, buffer_, buffer_, FFTW_R2HC, FFTW_ESTIMATE);
    backward_ = fftw_plan_r2r_1d(n, buffer_, buffer_, FFTW_HC2R, FFTW_ESTIMATE);
  }
}

Discretization::~Discretization() {
  std::lock_guard lock(planner_mutex());
  if (backward_ && backward_ != forward_) fftw_destroy_plan(static_cast<fftw_plan>(backward_));
  if (forward_) fftw_destroy_plan(static_cast<fftw_plan>(forward_));
  fftw_free(buffer_);
}

double Discretization::min_kinetic() const {
  return *std::min_element(kinetic_.begin(), kinetic_.end());
}

void Discretization::apply_spectral(std::span<const double> d,
                                    std::span<const double> in, std::span<double> out) {
  const std::size_t n = size();
  std::copy(in.begin(), in.end(), buffer_);
  fftw_execute(static_cast<fftw_plan>(forward_));
  for (std::size_t k = 0; k < n; ++k) buffer_[k] *= d[k];
  fftw_execute(static_cast<fftw_plan>(backward_));
  // RODFT00 twice scales by 2N; R2HC followed by HC2R scales by N.
  const double norm = dim_ == 3 ? 1.0 / (2.0 * n_) : 1.0 / n_;
  for (std::size_t j = 0; j < n; ++j) out[j] = buffer_[j] * norm;
}

void Discretization::apply_kinetic(std::span<const double> in, std::span<double> out) {
  apply_spectral(kinetic_, in, out);
}

std::vector<double> Discretization::mode(int k) const {
  std::vector<double> v(size());
  double norm2 = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (dim_ == 3) {
      v[j] = std::sin(k * std::numbers::pi * (j + 1.0) / n_);
    } else {
      v[j] = std::cos(2.0 * std::numbers::pi * k * j / n_);
    }
    norm2 += v[j] * v[j];
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& x : v) x *= inv;
  return v;
}

}  // namespace salpeter::solver
