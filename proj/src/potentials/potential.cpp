#include "potentials/potential.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "common/error.hpp"

namespace salpeter::potentials {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::string to_string(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::Exponential: return "exponential";
    case PotentialKind::PowerExponential: return "power-exponential";
    case PotentialKind::Singular: return "singular";
    case PotentialKind::Logarithmic: return "logarithmic";
    case PotentialKind::Tabulated: return "tabulated";
  }
  return "unknown";
}

Potential::Potential(PotentialKind kind, double g, double range,
                     std::shared_ptr<const Table> table)
    : kind_(kind), g_(g), range_(range), table_(std::move(table)) {
  if (!(g >= 0.0) || !std::isfinite(g)) {
    throw InvalidArgument("potential: coupling g must be finite and >= 0");
  }
  if (!(range > 0.0) || !std::isfinite(range)) {
    throw InvalidArgument("potential: range R must be finite and > 0");
  }
  if (kind == PotentialKind::Tabulated && !table_) {
    throw InvalidArgument("potential: tabulated kind needs a table");
  }
}

Potential Potential::exponential(double g, double range) {
  return {PotentialKind::Exponential, g, range, nullptr};
}
Potential Potential::power_exponential(double g, double range) {
  return {PotentialKind::PowerExponential, g, range, nullptr};
}
Potential Potential::singular(double g, double range) {
  return {PotentialKind::Singular, g, range, nullptr};
}
Potential Potential::logarithmic(double g, double range) {
  return {PotentialKind::Logarithmic, g, range, nullptr};
}
Potential Potential::tabulated(std::shared_ptr<const Table> table, double g) {
  const double extent = table ? table->radii().back() : 1.0;
  return {PotentialKind::Tabulated, g, extent > 0.0 ? extent : 1.0, std::move(table)};
}
Potential Potential::zero() {
  return tabulated(std::make_shared<Table>(std::vector<double>{0.0, 1.0},
                                           std::vector<double>{0.0, 0.0}));
}

Potential Potential::with_coupling(double g) const {
  return {kind_, g, range_, table_};
}

Potential Potential::with_range(double range) const {
  if (kind_ == PotentialKind::Tabulated) {
    throw InvalidArgument("potential: a tabulated profile has no adjustable range");
  }
  return {kind_, g_, range, table_};
}

double Potential::operator()(double r) const {
  if (std::isnan(r) || r < 0.0) {
    throw DomainError("potential: radius must be >= 0");
  }
  const double R = range_;
  switch (kind_) {
    case PotentialKind::Exponential:
      return -g_ / R * std::exp(-r / R);
    case PotentialKind::PowerExponential:
      return -g_ / (R * R) * r * std::exp(-r / R);
    case PotentialKind::Singular:
      if (r == 0.0) throw DomainError("singular potential is undefined at r = 0");
      return -g_ / std::sqrt(r * R) * std::exp(-r / R);
    case PotentialKind::Logarithmic:
      if (r == 0.0) throw DomainError("logarithmic potential is undefined at r = 0");
      return g_ / R * std::log(r / R);
    case PotentialKind::Tabulated: {
      const double v = (*table_)(r);
      if (std::isinf(v)) throw DomainError("tabulated potential diverges at r = 0");
      return g_ * v;
    }
  }
  return 0.0;
}

double Potential::infimum() const {
  if (g_ == 0.0) return 0.0;
  switch (kind_) {
    case PotentialKind::Exponential: return -g_ / range_;
    case PotentialKind::PowerExponential: return -g_ / (std::numbers::e * range_);
    case PotentialKind::Singular:
    case PotentialKind::Logarithmic: return -kInf;
    case PotentialKind::Tabulated: return g_ * table_->min_value();
  }
  return 0.0;
}

double Potential::limit_at_infinity() const {
  switch (kind_) {
    case PotentialKind::Logarithmic: return g_ == 0.0 ? 0.0 : kInf;
    case PotentialKind::Tabulated: return g_ * table_->last_value();
    default: return 0.0;
  }
}

double Potential::origin_exponent() const {
  if (g_ == 0.0) return 0.0;
  switch (kind_) {
    case PotentialKind::Singular: return 0.5;
    case PotentialKind::Tabulated: return table_->origin_exponent();
    default: return 0.0;
  }
}

bool Potential::singular_at_origin() const {
  if (g_ == 0.0) return false;
  return kind_ == PotentialKind::Logarithmic || origin_exponent() > 0.0;
}

double Potential::length_scale() const { return range_; }

}  // namespace salpeter::potentials
