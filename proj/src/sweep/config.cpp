#include "sweep/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

#include "common/error.hpp"
#include "potentials/table.hpp"

namespace salpeter::sweep {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v)) {
    throw InvalidArgument("invalid number for " + key + ": '" + text + "'");
  }
  return v;
}

int parse_int(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE || v < -(1L << 30) ||
      v > (1L << 30)) {
    throw InvalidArgument("invalid integer for " + key + ": '" + text + "'");
  }
  return static_cast<int>(v);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string join(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += fmt(xs[i]);
  }
  return out;
}

void require_increasing(const std::string& key, const std::vector<double>& xs) {
  if (xs.empty()) throw InvalidArgument(key + ": range must not be empty");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) {
      throw InvalidArgument(key + ": values must be strictly increasing");
    }
  }
}

void require_positive(const std::string& key, const std::vector<double>& xs) {
  for (double x : xs) {
    if (!(x > 0.0)) throw InvalidArgument(key + ": values must be positive");
  }
}

}  // namespace

Command parse_command(const std::string& name) {
  if (name == "bound3d") return Command::Bound3d;
  if (name == "bound1d") return Command::Bound1d;
  if (name == "critical") return Command::Critical;
  if (name == "confining") return Command::Confining;
  if (name == "solve") return Command::Solve;
  if (name == "fig1") return Command::Fig1;
  if (name == "fig2") return Command::Fig2;
  throw InvalidArgument("unknown command '" + name +
                        "' (expected bound3d, bound1d, critical, confining, solve, fig1 or "
                        "fig2)");
}

std::string to_string(Command c) {
  switch (c) {
    case Command::Bound3d: return "bound3d";
    case Command::Bound1d: return "bound1d";
    case Command::Critical: return "critical";
    case Command::Confining: return "confining";
    case Command::Solve: return "solve";
    case Command::Fig1: return "fig1";
    case Command::Fig2: return "fig2";
  }
  return "unknown";
}

PotentialSpec PotentialSpec::parse(const std::string& text) {
  const std::string t = trim(text);
  PotentialSpec p;
  if (t.rfind("table:", 0) == 0) {
    p.kind = "table";
    p.table_path = t.substr(6);
    if (p.table_path.empty()) throw InvalidArgument("potential table: missing path");
    return p;
  }
  if (t == "exp" || t == "pexp" || t == "sing" || t == "log" || t == "zero") {
    p.kind = t;
    return p;
  }
  throw InvalidArgument("unknown potential '" + text +
                        "' (expected exp, pexp, sing, log, zero or table:<path>)");
}

std::string PotentialSpec::text() const {
  return kind == "table" ? "table:" + table_path : kind;
}

potentials::Potential PotentialSpec::build(double g, double range) const {
  using potentials::Potential;
  if (kind == "exp") return Potential::exponential(g, range);
  if (kind == "pexp") return Potential::power_exponential(g, range);
  if (kind == "sing") return Potential::singular(g, range);
  if (kind == "log") return Potential::logarithmic(g, range);
  if (kind == "zero") return Potential::zero();
  if (kind == "table") {
    auto table = std::make_shared<const potentials::Table>(potentials::Table::load(table_path));
    return Potential::tabulated(std::move(table), g);
  }
  throw InvalidArgument("unknown potential kind '" + kind + "'");
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw InvalidArgument("grid must be a:b:n, got '" + text + "'");
  const double a = parse_double("grid start", parts[0]);
  const double b = parse_double("grid end", parts[1]);
  const int n = parse_int("grid count", parts[2]);
  if (n < 1) throw InvalidArgument("grid count must be >= 1");
  if (n == 1) {
    if (a != b) throw InvalidArgument("a one-point grid needs a == b");
    return {a};
  }
  if (!(b > a)) throw InvalidArgument("grid must satisfy a < b");
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = i == n - 1 ? b : a + (b - a) * i / (n - 1);
  return xs;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) xs.push_back(parse_double("list entry", item));
  if (xs.empty()) throw InvalidArgument("list must not be empty");
  return xs;
}

RunConfig::RunConfig() {
  quadrature.abs_tol = 1e-10;
  quadrature.rel_tol = 1e-10;
}

void RunConfig::set(const std::string& raw_key, const std::string& value) {
  const std::string key = trim(raw_key);
  if (key == "command") {
    command = parse_command(trim(value));
  } else if (key == "potential") {
    potential = PotentialSpec::parse(value);
  } else if (key == "g") {
    coupling = parse_double(key, value);
  } else if (key == "R") {
    range = parse_double(key, value);
  } else if (key == "m") {
    mass = parse_double(key, value);
  } else if (key == "alpha") {
    alpha = parse_double(key, value);
  } else if (key == "dim") {
    dimension = parse_int(key, value);
  } else if (key == "q") {
    q = parse_double(key, value);
  } else if (key == "beta-grid") {
    betas = parse_grid(value);
  } else if (key == "beta-list") {
    betas = parse_list(value);
  } else if (key == "g-list") {
    couplings = parse_list(value);
  } else if (key == "m-grid") {
    masses = parse_grid(value);
  } else if (key == "m-list") {
    masses = parse_list(value);
  } else if (key == "out") {
    output = trim(value);
  } else if (key == "L") {
    box_length = parse_double(key, value);
  } else if (key == "N") {
    grid_points = parse_int(key, value);
  } else if (key == "eigen-tol") {
    eigen_tolerance = parse_double(key, value);
  } else if (key == "coupling-tol") {
    coupling_tolerance = parse_double(key, value);
  } else if (key == "quad-abs-tol") {
    quadrature.abs_tol = parse_double(key, value);
  } else if (key == "quad-rel-tol") {
    quadrature.rel_tol = parse_double(key, value);
  } else {
    throw InvalidArgument("unknown configuration key '" + key + "'");
  }
}

void RunConfig::parse(std::istream& in, const std::string& origin) {
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgument(origin + ":" + std::to_string(number) + ": expected key = value");
    }
    try {
      set(line.substr(0, eq), line.substr(eq + 1));
    } catch (const InvalidArgument& e) {
      throw InvalidArgument(origin + ":" + std::to_string(number) + ": " + e.what());
    }
  }
}

void RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  parse(in, path);
}

Command RunConfig::effective_command() const {
  if (!command) throw InvalidArgument("no command given");
  return *command;
}

PotentialSpec RunConfig::effective_potential() const {
  if (potential) return *potential;
  PotentialSpec p;
  if (command == Command::Fig2) p.kind = "log";
  return p;
}

double RunConfig::effective_range() const {
  if (range) return *range;
  return command == Command::Fig2 ? 2.5 : 1.0;
}

std::vector<double> RunConfig::effective_betas() const {
  if (!betas.empty()) return betas;
  return {0.2, 0.5, 1.0, 2.0, 5.0};
}

std::vector<double> RunConfig::effective_couplings() const {
  if (!couplings.empty()) return couplings;
  return {0.1, 0.5, 2.0};
}

std::vector<double> RunConfig::effective_masses() const {
  if (!masses.empty()) return masses;
  return parse_grid("0.4:4:10");
}

solver::SolverConfig RunConfig::solver_config(double m, int dim) const {
  solver::SolverConfig s;
  s.dimension = dim;
  s.alpha = alpha;
  s.mass = m;
  s.box_length = box_length;
  s.grid_points = grid_points;
  s.eigen_tolerance = eigen_tolerance;
  return s;
}

void RunConfig::validate() const {
  const Command c = effective_command();
  if (!(coupling >= 0.0)) throw InvalidArgument("g must be >= 0");
  if (!(effective_range() > 0.0)) throw InvalidArgument("R must be positive");
  if (!(mass > 0.0)) throw InvalidArgument("m must be positive");
  if (!(alpha > 0.0)) throw InvalidArgument("alpha must be positive");
  if (dimension != 1 && dimension != 3) throw InvalidArgument("dim must be 1 or 3");
  if (box_length < 0.0) throw InvalidArgument("L must be positive (or 0 for automatic)");
  if (grid_points != 0 && grid_points < 16) throw InvalidArgument("N must be >= 16");
  if (!(eigen_tolerance > 0.0)) throw InvalidArgument("eigen-tol must be positive");
  if (!(coupling_tolerance > 0.0)) throw InvalidArgument("coupling-tol must be positive");
  quadrature.validate();
  if (q && (c == Command::Bound3d || c == Command::Bound1d)) {
    const double hi = c == Command::Bound3d ? 1.5 : 2.0;
    const bool ok = c == Command::Bound3d ? (*q >= 1.0 && *q < hi) : (*q >= 1.0 && *q <= hi);
    if (!ok) {
      throw InvalidArgument(std::string("q must lie in [1, ") + fmt(hi) +
                            (c == Command::Bound3d ? ")" : "]"));
    }
  }
  if (c == Command::Critical && dimension != 3) {
    throw InvalidArgument("critical: the coupling bound is three-dimensional; use dim = 3");
  }
  if (c == Command::Fig1) {
    require_increasing("beta", effective_betas());
    require_positive("beta", effective_betas());
  }
  if (c == Command::Fig2) {
    require_increasing("g", effective_couplings());
    require_positive("g", effective_couplings());
    require_increasing("m", effective_masses());
    require_positive("m", effective_masses());
  }
}

std::vector<std::pair<std::string, std::string>> RunConfig::echo() const {
  std::vector<std::pair<std::string, std::string>> out;
  const Command c = effective_command();
  out.emplace_back("command", to_string(c));
  if (c == Command::Fig1) {
    out.emplace_back("potential", potential ? potential->text() : "exp,pexp,sing");
  } else {
    out.emplace_back("potential", effective_potential().text());
  }
  if (c != Command::Fig1 && c != Command::Fig2 && c != Command::Critical) {
    out.emplace_back("g", fmt(coupling));
  }
  out.emplace_back("R", fmt(effective_range()));
  if (c != Command::Fig1 && c != Command::Fig2) out.emplace_back("m", fmt(mass));
  out.emplace_back("alpha", fmt(alpha));
  out.emplace_back("dim", std::to_string(c == Command::Fig1 || c == Command::Fig2 ? 3 : dimension));
  if (q) out.emplace_back("q", fmt(*q));
  if (c == Command::Fig1) out.emplace_back("beta-list", join(effective_betas()));
  if (c == Command::Fig2) {
    out.emplace_back("g-list", join(effective_couplings()));
    out.emplace_back("m-list", join(effective_masses()));
  }
  const bool solves = c == Command::Solve || c == Command::Critical || c == Command::Fig1 ||
                      c == Command::Fig2;
  if (solves) {
    out.emplace_back("L", box_length > 0.0 ? fmt(box_length) : "auto");
    out.emplace_back("N", grid_points > 0 ? std::to_string(grid_points) : "auto");
    out.emplace_back("eigen-tol", fmt(eigen_tolerance));
  }
  if (c == Command::Critical || c == Command::Fig1) {
    out.emplace_back("coupling-tol", fmt(coupling_tolerance));
  }
  out.emplace_back("quad-abs-tol", fmt(quadrature.abs_tol));
  out.emplace_back("quad-rel-tol", fmt(quadrature.rel_tol));
  return out;
}

}  // namespace salpeter::sweep
