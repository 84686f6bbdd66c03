#include "solver/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "common/error.hpp"
#include "specfun/quadrature.hpp"

namespace salpeter::solver {

namespace {

constexpr int kDenseLimit = 4096;
constexpr double kAveragedCells = 64.0;

int next_power_of_two(double x) {
  int n = 16;
  while (n < x && n < (1 << 24)) n *= 2;
  return n;
}

double relative_delta(double a, double b, double scale) {
  return std::abs(a - b) / std::max(std::abs(b), scale);
}

// Linear interpolation of grid samples onto new coordinates. Values outside
// the sampled range go to zero (Dirichlet wall in 3D, decayed tail in 1D).
std::vector<double> resample(const std::vector<double>& x, const std::vector<double>& y,
                             const std::vector<double>& at, int dimension) {
  std::vector<double> out(at.size(), 0.0);
  for (std::size_t i = 0; i < at.size(); ++i) {
    const double t = at[i];
    if (dimension == 3 && t < x.front()) {
      out[i] = y.front() * t / x.front();
      continue;
    }
    if (t < x.front() || t > x.back()) continue;
    auto it = std::upper_bound(x.begin(), x.end(), t);
    if (it == x.end()) {
      out[i] = y.back();
      continue;
    }
    const std::size_t k = static_cast<std::size_t>(it - x.begin());
    const double w = (t - x[k - 1]) / (x[k] - x[k - 1]);
    out[i] = (1.0 - w) * y[k - 1] + w * y[k];
  }
  return out;
}

// Probability outside half the box: r > L/2 in 3D, |x| > L/4 in 1D.
double outer_probability(const Discretization& grid, std::span<const double> unit) {
  const double edge = grid.dimension() == 3 ? 0.5 * grid.box_length()
                                            : 0.25 * grid.box_length();
  const auto& c = grid.coordinates();
  double p = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (std::abs(c[j]) > edge) p += unit[j] * unit[j];
  }
  return p;
}

// Trial vector for a cold start: a smooth bump on the scale of the potential.
std::vector<double> cold_start(const Discretization& grid, double scale) {
  const auto& c = grid.coordinates();
  std::vector<double> v(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double r = std::abs(c[j]);
    v[j] = (grid.dimension() == 3 ? r : 1.0) * std::exp(-r / scale);
  }
  return v;
}

void fix_sign(std::vector<double>& v) {
  auto it = std::max_element(v.begin(), v.end(),
                             [](double a, double b) { return std::abs(a) < std::abs(b); });
  if (it != v.end() && *it < 0.0) {
    for (double& x : v) x = -x;
  }
}


// One fixed-grid solve with its eigenvector kept in unit l2 norm.
struct GridSolve {
  double value = 0.0;
  std::vector<double> unit;
  std::vector<double> coords;
  double outer = 0.0;
};

GridSolve solve_on(Hamiltonian& h, EigenMethod method, std::span<const double> guess) {
  EigenPair e = h.ground_state(method, guess);
  GridSolve out;
  out.value = e.value;
  out.unit = std::move(e.vector);
  fix_sign(out.unit);
  out.coords = h.grid().coordinates();
  out.outer = outer_probability(h.grid(), out.unit);
  return out;
}

std::vector<double> warm_guess(const GridSolve* previous, const Hamiltonian& h) {
  if (previous == nullptr || previous->unit.empty()) return {};
  return resample(previous->coords, previous->unit, h.grid().coordinates(),
                  h.grid().dimension());
}

int grid_cap(const SolverConfig& cfg) {
  return cfg.method == EigenMethod::Dense ? std::min(cfg.max_grid_points, kDenseLimit)
                                          : cfg.max_grid_points;
}

SpectrumResult make_result(const Hamiltonian& h, const GridSolve& s, double delta,
                           const SolverConfig& cfg) {
  SpectrumResult r;
  r.mass = s.value;
  r.binding = s.value - cfg.alpha * cfg.mass;
  r.grid = s.coords;
  const double inv = 1.0 / std::sqrt(h.grid().spacing());
  r.wavefunction.resize(s.unit.size());
  for (std::size_t j = 0; j < s.unit.size(); ++j) r.wavefunction[j] = s.unit[j] * inv;
  r.refinement_delta = delta;
  r.outer_probability = s.outer;
  r.grid_points = h.grid().grid_points();
  r.box_length = h.grid().box_length();
  return r;
}

SpectrumResult converge(const Potential& v, const SolverConfig& cfg) {
  cfg.validate();
  if (cfg.dimension == 3 && v.singular_at_origin() && v.origin_exponent() >= 1.5) {
    throw DomainError("solver: potential too singular at the origin for an s-wave state");
  }
  auto [length, points] = default_grid(v, cfg);
  const bool adapt = cfg.adapt_box && cfg.box_length == 0.0;
  const int cap = grid_cap(cfg);
  const double scale = 0.1 * cfg.alpha * cfg.mass;

  GridSolve prev;
  bool have_prev = false;
  int doublings = 0;
  while (true) {
    Hamiltonian coarse(v, cfg.dimension, length, points, cfg.alpha, cfg.mass);
    GridSolve a = solve_on(coarse, cfg.method, warm_guess(have_prev ? &prev : nullptr, coarse));
    if (adapt && a.outer > cfg.tail_tolerance && doublings < cfg.max_box_doublings &&
        2 * points <= cap / 2) {
      length *= 2.0;
      points *= 2;
      ++doublings;
      prev = std::move(a);
      have_prev = true;
      continue;
    }
    if (2 * points > cap) {
      std::ostringstream os;
      os << "solver: grid refinement needs N > " << cap;
      throw ConvergenceError(os.str());
    }
    Hamiltonian fine(v, cfg.dimension, length, 2 * points, cfg.alpha, cfg.mass);
    GridSolve b = solve_on(fine, cfg.method, warm_guess(&a, fine));
    const double delta = relative_delta(a.value, b.value, scale);
    if (delta < cfg.eigen_tolerance) return make_result(fine, b, delta, cfg);
    points *= 2;
    prev = std::move(b);
    have_prev = true;
  }
}

}  // namespace

void SolverConfig::validate() const {
  if (dimension != 1 && dimension != 3) {
    throw InvalidArgument("solver: dimension must be 1 or 3");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidArgument("solver: alpha must be positive");
  }
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw InvalidArgument("solver: mass m must be positive");
  }
  if (!(box_length >= 0.0) || !std::isfinite(box_length)) {
    throw InvalidArgument("solver: box length L must be positive (or 0 for automatic)");
  }
  if (grid_points != 0 && grid_points < 16) {
    throw InvalidArgument("solver: grid count N must be >= 16 (or 0 for automatic)");
  }
  if (max_grid_points < 32) throw InvalidArgument("solver: max grid count must be >= 32");
  if (!(eigen_tolerance > 0.0)) {
    throw InvalidArgument("solver: eigen tolerance must be positive");
  }
  if (!(tail_tolerance > 0.0)) {
    throw InvalidArgument("solver: tail tolerance must be positive");
  }
  if (max_box_doublings < 0) throw InvalidArgument("solver: max box doublings must be >= 0");
}

Hamiltonian::Hamiltonian(const Potential& v, int dimension, double box_length,
                         int grid_points, double alpha, double mass)
    : grid_(std::make_unique<Discretization>(dimension, box_length, grid_points, alpha,
                                             mass)),
      coupling_(v.coupling()) {
  const Potential shape = v.with_coupling(1.0);
  const auto& c = grid_->coordinates();
  potential_.resize(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) potential_[j] = shape(std::abs(c[j]));
  scratch_.resize(c.size());
  if (!shape.singular_at_origin()) return;

  // Point samples of an origin singularity converge slowly; cells near the
  // origin carry the average of V over [|x| - h/2, |x| + h/2] instead.
  const double h = grid_->spacing();
  const double a = std::min(shape.origin_exponent(), 0.9);
  const double k = std::max(2.0, 1.0 / (1.0 - a));
  specfun::QuadratureSpec spec;
  spec.abs_tol = 1e-14;
  spec.rel_tol = 1e-11;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double r = std::abs(c[j]);
    if (r > kAveragedCells * h) continue;
    const double lo = std::max(r - 0.5 * h, 0.0);
    const double hi = r + 0.5 * h;
    double sum;
    if (lo == 0.0) {
      sum = specfun::integrate(
                [&](double t) {
                  if (t <= 0.0) return 0.0;
                  return shape(hi * std::pow(t, k)) * hi * k * std::pow(t, k - 1.0);
                },
                0.0, 1.0, spec)
                .value;
    } else {
      sum = specfun::integrate([&](double x) { return shape(x); }, lo, hi, spec).value;
    }
    potential_[j] = sum / (hi - lo);
  }
}

void Hamiltonian::apply_kinetic(std::span<const double> in, std::span<double> out) {
  grid_->apply_kinetic(in, out);
}

void Hamiltonian::apply(std::span<const double> in, std::span<double> out) {
  grid_->apply_kinetic(in, out);
  for (std::size_t j = 0; j < potential_.size(); ++j) {
    out[j] += coupling_ * potential_[j] * in[j];
  }
}

Eigen::MatrixXd Hamiltonian::dense() {
  const std::size_t n = size();
  Eigen::MatrixXd h(n, n);
  std::vector<double> e(n, 0.0), col(n);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    grid_->apply_kinetic(e, col);
    e[j] = 0.0;
    for (std::size_t i = 0; i < n; ++i) h(i, j) = col[i];
  }
  h = 0.5 * (h + h.transpose()).eval();
  for (std::size_t j = 0; j < n; ++j) h(j, j) += coupling_ * potential_[j];
  return h;
}

double Hamiltonian::rayleigh_quotient(std::span<const double> x) {
  apply(x, scratch_);
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    num += x[j] * scratch_[j];
    den += x[j] * x[j];
  }
  if (!(den > 0.0)) throw InvalidArgument("rayleigh quotient of a zero vector");
  return num / den;
}

EigenPair Hamiltonian::ground_state(EigenMethod method, std::span<const double> guess) {
  if (method == EigenMethod::Dense) {
    if (size() > static_cast<std::size_t>(kDenseLimit)) {
      throw InvalidArgument("solver: dense path limited to N <= 4096");
    }
    EigenPair e = lowest_eigenpair_dense(dense());
    return e;
  }

  std::vector<double> x;
  if (guess.size() == size()) x.assign(guess.begin(), guess.end());
  double xx = 0.0;
  for (double v : x) xx += v * v;
  if (!(xx > 0.0)) {
    // A small dense solve on a coarse grid of the same box seeds the iteration.
    const int coarse_n = std::min(grid_->grid_points(), 256);
    if (coarse_n < grid_->grid_points()) {
      std::vector<double> shape_x = grid_->coordinates();
      Discretization coarse(grid_->dimension(), grid_->box_length(), coarse_n,
                            grid_->alpha(), grid_->mass());
      // Sample the coarse potential by interpolating the fine samples.
      const auto& cc = coarse.coordinates();
      std::vector<double> w = resample(shape_x, potential_, cc, 1);
      const std::size_t m = cc.size();
      Eigen::MatrixXd h(m, m);
      std::vector<double> e(m, 0.0), col(m);
      for (std::size_t j = 0; j < m; ++j) {
        e[j] = 1.0;
        coarse.apply_kinetic(e, col);
        e[j] = 0.0;
        for (std::size_t i = 0; i < m; ++i) h(i, j) = col[i];
      }
      h = 0.5 * (h + h.transpose()).eval();
      for (std::size_t j = 0; j < m; ++j) h(j, j) += coupling_ * w[j];
      EigenPair seed = lowest_eigenpair_dense(h);
      x = resample(cc, seed.vector, shape_x, grid_->dimension());
    } else {
      x = cold_start(*grid_, grid_->box_length() / 20.0);
    }
  }

  // Preconditioner (T - T_min + tau)^{-1}, diagonal in transform space.
  const auto& t = grid_->kinetic_diagonal();
  const double t_min = grid_->min_kinetic();
  const double rq = rayleigh_quotient(x);
  double t_next = std::numeric_limits<double>::infinity();
  for (double tk : t) {
    if (tk > t_min * (1.0 + 1e-14)) t_next = std::min(t_next, tk);
  }
  const double tau = std::max(t_min - rq, t_next - t_min);
  precond_.resize(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) precond_[k] = 1.0 / (t[k] - t_min + tau);

  LobpcgOptions opts;
  opts.residual_tolerance = 1e-10;
  opts.scale = grid_->alpha() * grid_->mass();
  auto apply_h = [this](std::span<const double> in, std::span<double> out) { apply(in, out); };
  auto apply_p = [this](std::span<const double> in, std::span<double> out) {
    grid_->apply_spectral(precond_, in, out);
  };
  return lowest_eigenpair_lobpcg(apply_h, apply_p, std::move(x), opts);
}

std::pair<double, int> default_grid(const Potential& v, const SolverConfig& cfg) {
  const double r = v.length_scale() > 0.0 ? v.length_scale() : 1.0 / cfg.mass;
  const double big = std::max(r, 1.0 / cfg.mass);
  const double small = std::min(r, 1.0 / cfg.mass);
  double length = cfg.box_length > 0.0 ? cfg.box_length
                                        : (cfg.dimension == 3 ? 20.0 : 40.0) * big;
  int points = cfg.grid_points;
  if (points == 0) {
    const double h0 = small / 16.0;
    points = next_power_of_two(std::max(256.0, length / h0));
    points = std::min(points, std::max(256, grid_cap(cfg) / 4));
  }
  return {length, points};
}

SpectrumResult ground_state_3d_swave(const Potential& v, const SolverConfig& cfg) {
  if (cfg.dimension != 3) throw InvalidArgument("ground_state_3d_swave: dimension must be 3");
  return converge(v, cfg);
}

SpectrumResult ground_state_1d(const Potential& v, const SolverConfig& cfg) {
  if (cfg.dimension != 1) throw InvalidArgument("ground_state_1d: dimension must be 1");
  return converge(v, cfg);
}

SpectrumResult ground_state(const Potential& v, const SolverConfig& cfg) {
  return converge(v, cfg);
}

namespace {

struct BisectionState {
  double lo;
  double hi;
  GridSolve at_hi;
};

// Bisection on a fixed grid. Requires M(lo) > target >= M(hi) on entry
// (checked, widened if needed) and keeps it at every step.
BisectionState bisect(Hamiltonian& h, const SolverConfig& cfg, double target, double lo,
                      double hi, double tol, GridSolve seed,
                      std::vector<std::pair<double, double>>& history) {
  GridSolve last = std::move(seed);
  auto mass_at = [&](double g) {
    h.set_coupling(g);
    GridSolve s = solve_on(h, cfg.method, warm_guess(last.unit.empty() ? nullptr : &last, h));
    last = s;
    return s;
  };

  GridSolve shi = mass_at(hi);
  int grow = 0;
  while (!(shi.value < target)) {
    lo = hi;
    hi *= 2.0;
    if (++grow > 60 || !std::isfinite(hi)) {
      throw BracketError("critical coupling: mass does not reach the target for any coupling");
    }
    shi = mass_at(hi);
  }
  if (lo > 0.0) {
    int shrink = 0;
    while (!(mass_at(lo).value > target)) {
      hi = lo;
      shi = last;
      lo *= 0.5;
      if (++shrink > 60) {
        throw BracketError("critical coupling: mass below target at vanishing coupling");
      }
    }
  } else {
    h.set_coupling(0.0);
    if (!(h.grid().min_kinetic() > target)) {
      throw BracketError("critical coupling: free mass already below target");
    }
  }
  history.emplace_back(lo, hi);

  while ((hi - lo) > tol * hi) {
    const double mid = 0.5 * (lo + hi);
    GridSolve s = mass_at(mid);
    if (s.value < target) {
      hi = mid;
      shi = std::move(s);
    } else {
      lo = mid;
    }
    history.emplace_back(lo, hi);
  }
  return {lo, hi, std::move(shi)};
}

}  // namespace

CriticalCouplingResult coupling_for_mass(const Potential& v, double target_mass,
                                         const SolverConfig& cfg, double coupling_tolerance) {
  cfg.validate();
  if (!(coupling_tolerance > 0.0)) {
    throw InvalidArgument("critical coupling: tolerance must be positive");
  }
  if (!std::isfinite(target_mass)) {
    throw InvalidArgument("critical coupling: target mass must be finite");
  }
  const Potential shape = v.with_coupling(1.0);
  if (!(shape.infimum() < 0.0)) {
    throw BracketError("critical coupling: potential has no attractive part");
  }
  auto [length, points] = default_grid(shape, cfg);
  const bool adapt = cfg.adapt_box && cfg.box_length == 0.0;
  const int cap = grid_cap(cfg);

  CriticalCouplingResult out;
  out.target_mass = target_mass;
  double lo = 0.0, hi = 1.0;
  GridSolve seed;
  int doublings = 0;
  while (true) {
    Hamiltonian h(shape, cfg.dimension, length, points, cfg.alpha, cfg.mass);
    BisectionState b = bisect(h, cfg, target_mass, lo, hi, coupling_tolerance, seed,
                              out.brackets);
    const double g = b.hi;
    if (adapt && b.at_hi.outer > cfg.tail_tolerance && doublings < cfg.max_box_doublings &&
        2 * points <= cap / 2) {
      length *= 2.0;
      points *= 2;
      ++doublings;
      lo = b.lo * 0.999;
      hi = b.hi * 1.001;
      seed = std::move(b.at_hi);
      continue;
    }

    out.coupling = g;
    out.mass_residual = b.at_hi.value - target_mass;
    out.grid_points = points;
    out.box_length = length;

    if (2 * points > cap) {
      out.converged = false;
      return out;
    }
    // First-order coupling shift on the doubled grid: dM/dg = <psi|W|psi>.
    Hamiltonian fine(shape, cfg.dimension, length, 2 * points, cfg.alpha, cfg.mass);
    fine.set_coupling(g);
    GridSolve f = solve_on(fine, cfg.method, warm_guess(&b.at_hi, fine));
    double slope = 0.0;
    for (std::size_t j = 0; j < f.unit.size(); ++j) {
      slope += f.unit[j] * f.unit[j] * fine.potential()[j];
    }
    const double shift = slope < 0.0 ? -(f.value - target_mass) / slope : 0.0;
    out.refinement_delta = std::abs(shift) / g;
    if (out.refinement_delta < cfg.eigen_tolerance) {
      out.converged = true;
      return out;
    }
    const double width = 4.0 * out.refinement_delta + 1e-3;
    points *= 2;
    lo = (g + shift) * (1.0 - width);
    hi = (g + shift) * (1.0 + width);
    seed = std::move(f);
  }
}

CriticalCouplingResult critical_coupling_exact(const Potential& v, const SolverConfig& cfg,
                                               double coupling_tolerance) {
  return coupling_for_mass(v, 0.0, cfg, coupling_tolerance);
}

}  // namespace salpeter::solver
