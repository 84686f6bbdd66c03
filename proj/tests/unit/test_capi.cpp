#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "salpeter/salpeter.h"

TEST_CASE("status codes and error messages") {
  double x = 0;
  CHECK(sb_bessel_k0(1.0, &x) == SB_OK);
  CHECK(x == doctest::Approx(0.42102443824070834).epsilon(1e-15));
  CHECK(sb_bessel_k0(-1.0, &x) == SB_ERR_DOMAIN);
  CHECK(std::strlen(sb_last_error_message()) > 0);
  CHECK(sb_bessel_k1(1.0, nullptr) == SB_ERR_INVALID_ARGUMENT);
  CHECK(std::string(sb_status_string(SB_ERR_OUT_OF_CLASS)) == "potential out of class");
  CHECK(sb_combined_constant(1.0, &x) == SB_OK);
  CHECK(x == doctest::Approx(1.0));
  CHECK(sb_green_norm_3d(1.0, 2.0, 2.0, &x) == SB_OK);
  CHECK(x * 4.0 == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(sb_green_norm_3d(1.5, 1.0, 1.0, &x) == SB_ERR_DOMAIN);
}

TEST_CASE("potential handles and bounds") {
  sb_potential* v = nullptr;
  REQUIRE(sb_potential_create(SB_POTENTIAL_EXPONENTIAL, 2.0, 1.0, &v) == SB_OK);
  double val = 0;
  CHECK(sb_potential_eval(v, 0.0, &val) == SB_OK);
  CHECK(val == doctest::Approx(-2.0));
  CHECK(sb_negative_part_norm(v, INFINITY, 3, &val) == SB_OK);
  CHECK(val == doctest::Approx(2.0));

  sb_bound_report rep{};
  CHECK(sb_bound_at(v, 3, 1.0, 2.0, 1.0, &rep) == SB_OK);
  CHECK(rep.mass_bound == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(sb_bound_optimize(v, 3, 1.0, 2.0, &rep) == SB_OK);
  CHECK(rep.q > 1.0);

  sb_critical_bound cb{};
  CHECK(sb_critical_coupling_bound(v, 1.0, 2.0, &cb) == SB_OK);
  sb_solver_options opt;
  sb_solver_options_default(&opt);
  sb_critical_result cr{};
  CHECK(sb_critical_coupling_exact(v, &opt, 1e-6, &cr) == SB_OK);
  CHECK(cb.value <= cr.coupling);
  CHECK(cr.bisection_steps > 10);

  sb_result* r = nullptr;
  CHECK(sb_solve_ground_state(v, &opt, &r) == SB_OK);
  CHECK(sb_result_mass(r) >= rep.mass_bound);
  CHECK(sb_result_size(r) == static_cast<size_t>(sb_result_grid_points(r) - 1));
  double norm = 0;
  const double h = sb_result_box_length(r) / sb_result_grid_points(r);
  for (size_t j = 0; j < sb_result_size(r); ++j) {
    norm += sb_result_wavefunction(r)[j] * sb_result_wavefunction(r)[j] * h;
  }
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
  sb_result_free(r);

  sb_potential* s = nullptr;
  REQUIRE(sb_potential_create(SB_POTENTIAL_SINGULAR, 1.0, 1.0, &s) == SB_OK);
  CHECK(sb_bound_at(s, 3, 1.0, 2.0, 1.1, &rep) == SB_ERR_DIVERGENCE);
  CHECK(std::string(sb_last_error_message()).find("requires q > 1.2") != std::string::npos);
  sb_potential_free(s);
  sb_potential_free(v);
}

TEST_CASE("tables and confining bounds") {
  sb_potential* y = nullptr;
  REQUIRE(sb_potential_load_table(SALPETER_TEST_DATA "/yukawa.txt", 1.0, &y) == SB_OK);
  sb_bound_report rep{};
  CHECK(sb_bound_optimize(y, 3, 1.0, 2.0, &rep) == SB_ERR_OUT_OF_CLASS);
  sb_potential_free(y);
  CHECK(sb_potential_load_table("/nonexistent", 1.0, &y) == SB_ERR_IO);

  const double r[] = {0.0, 1.0, 2.0};
  const double v[] = {-1.0, 0.0, 3.0};
  sb_potential* t = nullptr;
  CHECK(sb_potential_from_table(r, v, 3, 1.0, &t) == SB_OK);
  sb_truncation_result tr{};
  CHECK(sb_confining_bound_at(t, 3, 1.0, 2.0, 1.0, &tr) == SB_OK);
  CHECK(tr.bound == doctest::Approx(1.0).epsilon(1e-8));
  sb_potential_free(t);

  sb_potential* lg = nullptr;
  REQUIRE(sb_potential_create(SB_POTENTIAL_LOGARITHMIC, 0.5, 2.5, &lg) == SB_OK);
  CHECK(sb_confining_bound(lg, 3, 1.0, 2.0, &tr) == SB_OK);
  CHECK(tr.root_found == 1);
  CHECK(std::abs(tr.residual) <= 1e-8);
  sb_potential_free(lg);
  CHECK(sb_potential_create(SB_POTENTIAL_TABULATED, 1.0, 1.0, &lg) == SB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("configured runs") {
  sb_config* c = nullptr;
  REQUIRE(sb_config_create(&c) == SB_OK);
  CHECK(sb_config_set(c, "command", "solve") == SB_OK);
  CHECK(sb_config_set(c, "potential", "zero") == SB_OK);
  CHECK(sb_config_set(c, "L", "10") == SB_OK);
  CHECK(sb_config_set(c, "N", "64") == SB_OK);
  CHECK(sb_config_set(c, "bogus", "1") == SB_ERR_INVALID_ARGUMENT);
  char* text = nullptr;
  sb_run_summary s{};
  REQUIRE(sb_run_to_string(c, &text, &s) == SB_OK);
  CHECK(std::string(text).find("2.096374054 GeV") != std::string::npos);
  CHECK(s.rows == 1);
  sb_string_free(text);
  CHECK(sb_config_load(c, "/nonexistent.cfg") == SB_ERR_IO);
  sb_config_free(c);
}
