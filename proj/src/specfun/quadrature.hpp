#pragma once

#include <functional>

namespace salpeter::specfun {

struct QuadratureSpec {
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  int max_subdivisions = 400;
  // Semi-infinite integrals are summed in chunks until the chunk contribution
  // drops below tolerance; integration never extends past this many decay
  // lengths.
  double max_decay_lengths = 800.0;

  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
};

using Integrand = std::function<double(double)>;

// Globally adaptive 21-point Gauss-Kronrod on [a, b]. Throws
// ConvergenceError if the error estimate exceeds max(abs_tol, rel_tol*|I|)
// after max_subdivisions bisections.
QuadResult integrate(const Integrand& f, double a, double b,
                     const QuadratureSpec& spec);

// Integral over [a, inf) of an integrand decaying at least like
// exp(-(x - a) / decay_length) beyond a, summed over consecutive chunks of
// one decay length.
QuadResult integrate_to_infinity(const Integrand& f, double a,
                                 double decay_length,
                                 const QuadratureSpec& spec);

}  // namespace salpeter::specfun
