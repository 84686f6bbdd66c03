#pragma once

#include <istream>
#include <string>
#include <vector>

namespace salpeter::potentials {

// Sampled radial potential with monotone (Fritsch-Carlson) cubic
// interpolation, which never overshoots the data between knots.
//
// Outside the sampled range:
//  * below the first radius (when it is > 0): if the first two samples are
//    negative and deepen toward the origin the table is continued as a power
//    law v0 (r/r0)^{-a}; otherwise the first value is held.
//  * beyond the last radius the last value is held.
class Table {
 public:
  Table(std::vector<double> radii, std::vector<double> values);

  // Two whitespace-separated columns (r, V); '#' starts a comment.
  static Table parse(std::istream& in, const std::string& origin = "<stream>");
  static Table load(const std::string& path);

  double operator()(double r) const;

  const std::vector<double>& radii() const { return r_; }
  const std::vector<double>& values() const { return v_; }

  // Exponent a of the inward power-law continuation, 0 if none.
  double origin_exponent() const { return origin_exponent_; }
  double min_value() const;
  double last_value() const { return v_.back(); }

 private:
  std::vector<double> r_, v_, slope_;
  double origin_exponent_ = 0.0;
};

}  // namespace salpeter::potentials
