#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "salpeter/salpeter.h"

namespace {

int fail(sb_status s) {
  const char* msg = sb_last_error_message();
  std::fprintf(stderr, "salpeter-bounds: error: %s\n", *msg ? msg : sb_status_string(s));
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower bounds and numerical ground states for the spinless Salpeter equation"};
  app.set_version_flag("--version", std::string(sb_version()));

  std::string command;
  app.add_option("command", command, "bound3d | bound1d | critical | confining | solve | fig1 | fig2")
      ->required();

  std::string config_path;
  app.add_option("--config", config_path, "key = value file; flags override it");

  // Flag name -> configuration key; values are passed through verbatim.
  const std::vector<std::pair<std::string, std::string>> keys = {
      {"--potential", "potential"}, {"--g", "g"},
      {"--R", "R"},                 {"--m", "m"},
      {"--alpha", "alpha"},         {"--dim", "dim"},
      {"--q", "q"},                 {"--beta-grid", "beta-grid"},
      {"--beta-list", "beta-list"}, {"--g-list", "g-list"},
      {"--m-grid", "m-grid"},       {"--m-list", "m-list"},
      {"--out", "out"},             {"--L", "L"},
      {"--N", "N"},                 {"--eigen-tol", "eigen-tol"},
      {"--coupling-tol", "coupling-tol"}, {"--quad-abs-tol", "quad-abs-tol"},
      {"--quad-rel-tol", "quad-rel-tol"},
  };
  const std::vector<std::string> help = {
      "exp | pexp | sing | log | zero | table:<path>",
      "coupling g",
      "range R [GeV^-1]",
      "constituent mass m [GeV]",
      "1 (one particle) or 2 (two identical particles)",
      "dimension, 1 or 3",
      "fixed Green's-function exponent (bound3d, bound1d)",
      "beta = mR grid a:b:n (fig1)",
      "comma-separated beta values (fig1)",
      "comma-separated couplings (fig2)",
      "mass grid a:b:n [GeV] (fig2)",
      "comma-separated masses [GeV] (fig2)",
      "CSV output path",
      "box length [GeV^-1] (solver; default automatic)",
      "grid count (solver; default automatic)",
      "relative N -> 2N tolerance of the solver",
      "relative bisection tolerance on g",
      "absolute quadrature tolerance",
      "relative quadrature tolerance",
  };
  std::vector<std::string> values(keys.size());
  std::vector<CLI::Option*> options(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    options[i] = app.add_option(keys[i].first, values[i], help[i]);
  }

  CLI11_PARSE(app, argc, argv);

  sb_config* cfg = nullptr;
  if (sb_status s = sb_config_create(&cfg); s != SB_OK) return fail(s);
  int code = 0;
  sb_status s = SB_OK;
  if (!config_path.empty()) s = sb_config_load(cfg, config_path.c_str());
  if (s == SB_OK) s = sb_config_set(cfg, "command", command.c_str());
  for (std::size_t i = 0; s == SB_OK && i < keys.size(); ++i) {
    if (options[i]->count() > 0) s = sb_config_set(cfg, keys[i].second.c_str(), values[i].c_str());
  }
  sb_run_summary summary{};
  if (s == SB_OK) s = sb_run(cfg, &summary);
  if (s != SB_OK) {
    code = fail(s);
  } else if (summary.failures > 0) {
    std::fprintf(stderr, "salpeter-bounds: %zu of %zu rows failed\n", summary.failures,
                 summary.rows);
    code = 1;
  }
  sb_config_free(cfg);
  return code;
}
