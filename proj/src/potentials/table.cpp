#include "potentials/table.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "common/error.hpp"

namespace salpeter::potentials {

Table::Table(std::vector<double> radii, std::vector<double> values)
    : r_(std::move(radii)), v_(std::move(values)) {
  if (r_.size() != v_.size()) {
    throw InvalidArgument("table: radius and value columns differ in length");
  }
  if (r_.size() < 2) throw InvalidArgument("table: at least two samples required");
  if (!(r_.front() >= 0.0)) throw InvalidArgument("table: first radius must be >= 0");
  for (std::size_t i = 0; i < r_.size(); ++i) {
    if (!std::isfinite(r_[i]) || !std::isfinite(v_[i])) {
      throw InvalidArgument("table: non-finite sample at row " + std::to_string(i));
    }
    if (i > 0 && !(r_[i] > r_[i - 1])) {
      throw InvalidArgument("table: radii must be strictly increasing (row " +
                            std::to_string(i) + ")");
    }
  }

  // Fritsch-Carlson slopes.
  const std::size_t n = r_.size();
  std::vector<double> delta(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    delta[i] = (v_[i + 1] - v_[i]) / (r_[i + 1] - r_[i]);
  }
  slope_.assign(n, 0.0);
  slope_[0] = delta[0];
  slope_[n - 1] = delta[n - 2];
  if (n > 2) {
    auto end_slope = [](double h0, double h1, double d0, double d1) {
      const double s = ((2 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
      return s * d0 <= 0.0 ? 0.0 : s;
    };
    slope_[0] = end_slope(r_[1] - r_[0], r_[2] - r_[1], delta[0], delta[1]);
    slope_[n - 1] =
        end_slope(r_[n - 1] - r_[n - 2], r_[n - 2] - r_[n - 3], delta[n - 2], delta[n - 3]);
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    slope_[i] = (delta[i - 1] * delta[i] <= 0.0) ? 0.0 : 0.5 * (delta[i - 1] + delta[i]);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (delta[i] == 0.0) {
      slope_[i] = slope_[i + 1] = 0.0;
      continue;
    }
    const double a = slope_[i] / delta[i];
    const double b = slope_[i + 1] / delta[i];
    if (a < 0.0) slope_[i] = 0.0;
    if (b < 0.0) slope_[i + 1] = 0.0;
    const double h = a * a + b * b;
    if (h > 9.0) {
      const double t = 3.0 / std::sqrt(h);
      slope_[i] = t * a * delta[i];
      slope_[i + 1] = t * b * delta[i];
    }
  }

  if (r_[0] > 0.0 && v_[0] < 0.0 && v_[1] < 0.0 && v_[0] < v_[1]) {
    origin_exponent_ = std::log(v_[0] / v_[1]) / std::log(r_[1] / r_[0]);
  }
}

Table Table::parse(std::istream& in, const std::string& origin) {
  std::vector<double> r, v;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    double a, b;
    if (!(fields >> a)) continue;  // blank or comment-only
    std::string rest;
    if (!(fields >> b) || (fields >> rest)) {
      throw InvalidArgument(origin + ":" + std::to_string(lineno) +
                            ": expected two numeric columns (r V)");
    }
    r.push_back(a);
    v.push_back(b);
  }
  try {
    return Table(std::move(r), std::move(v));
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(origin + ": " + e.what());
  }
}

Table Table::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open potential table '" + path + "'");
  return parse(in, path);
}

double Table::operator()(double r) const {
  if (r < r_.front()) {
    if (origin_exponent_ > 0.0) {
      if (r <= 0.0) return -std::numeric_limits<double>::infinity();
      return v_[0] * std::pow(r / r_[0], -origin_exponent_);
    }
    return v_[0];
  }
  if (r >= r_.back()) return v_.back();
  const auto it = std::upper_bound(r_.begin(), r_.end(), r);
  const std::size_t i = static_cast<std::size_t>(it - r_.begin()) - 1;
  const double h = r_[i + 1] - r_[i];
  const double t = (r - r_[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  return h00 * v_[i] + h10 * h * slope_[i] + h01 * v_[i + 1] + h11 * h * slope_[i + 1];
}

double Table::min_value() const {
  if (origin_exponent_ > 0.0) return -std::numeric_limits<double>::infinity();
  return *std::min_element(v_.begin(), v_.end());
}

}  // namespace salpeter::potentials
