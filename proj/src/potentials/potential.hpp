#pragma once

#include <memory>
#include <string>

#include "potentials/table.hpp"

namespace salpeter::potentials {

enum class PotentialKind {
  Exponential,       // -g/R exp(-r/R)
  PowerExponential,  // -g/R^2 r exp(-r/R)
  Singular,          // -g (rR)^{-1/2} exp(-r/R)
  Logarithmic,       // g/R ln(r/R)
  Tabulated,         // g * table(r)
};

std::string to_string(PotentialKind kind);

// Central potential V(r) = g v(r). Energies in GeV, lengths in GeV^-1.
// In one dimension the same profile is used as V(|x|).
class Potential {
 public:
  static Potential exponential(double g, double range);
  static Potential power_exponential(double g, double range);
  static Potential singular(double g, double range);
  static Potential logarithmic(double g, double range);
  static Potential tabulated(std::shared_ptr<const Table> table, double g = 1.0);
  // V == 0; useful as a free-particle reference.
  static Potential zero();

  PotentialKind kind() const { return kind_; }
  double coupling() const { return g_; }
  double range() const { return range_; }
  const Table* table() const { return table_.get(); }

  Potential with_coupling(double g) const;
  Potential with_range(double range) const;

  // V(r) for r >= 0. Throws DomainError for r < 0 and at r = 0 for profiles
  // that diverge at the origin.
  double operator()(double r) const;

  // inf_r V(r); -infinity when unbounded below.
  double infimum() const;
  // lim_{r->inf} V(r); +infinity for confining profiles.
  double limit_at_infinity() const;
  // a with |V(r)| ~ r^{-a} as r -> 0 (0 for bounded or logarithmic profiles).
  double origin_exponent() const;
  // Profile diverges at the origin (power law or logarithm).
  bool singular_at_origin() const;
  // Characteristic length of the profile.
  double length_scale() const;

 private:
  Potential(PotentialKind kind, double g, double range,
            std::shared_ptr<const Table> table);

  PotentialKind kind_;
  double g_;
  double range_;
  std::shared_ptr<const Table> table_;
};

}  // namespace salpeter::potentials
