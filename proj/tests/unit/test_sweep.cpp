#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "common/error.hpp"
#include "sweep/config.hpp"
#include "sweep/sweep.hpp"

using namespace salpeter;
using sweep::RunConfig;

namespace {

std::string run_to_string(const RunConfig& c, sweep::RunSummary* s = nullptr) {
  std::ostringstream os;
  const auto r = sweep::run(c, os);
  if (s) *s = r;
  return os.str();
}

}  // namespace

TEST_SUITE("sweep") {

TEST_CASE("grid and list parsing") {
  const auto g = sweep::parse_grid("0.4:4:10");
  REQUIRE(g.size() == 10);
  CHECK(g.front() == 0.4);
  CHECK(g.back() == 4.0);
  CHECK(g[1] == doctest::Approx(0.8));
  CHECK(sweep::parse_list("0.1, 0.5,2") == std::vector<double>{0.1, 0.5, 2.0});
  CHECK_THROWS_AS(sweep::parse_grid("1:0:3"), InvalidArgument);
  CHECK_THROWS_AS(sweep::parse_grid("1:2"), InvalidArgument);
  CHECK_THROWS_AS(sweep::parse_list("1,x"), InvalidArgument);
}

TEST_CASE("config file parsing and later settings override earlier ones") {
  RunConfig c;
  std::istringstream in("# comment\ncommand = fig2\nm-list = 1, 2  # inline\nR = 2\n");
  c.parse(in, "test");
  CHECK(c.effective_command() == sweep::Command::Fig2);
  CHECK(c.effective_range() == 2.0);
  c.set("R", "3");
  CHECK(c.effective_range() == 3.0);
  CHECK(c.effective_potential().kind == "log");
  std::istringstream bad("nonsense = 1\n");
  CHECK_THROWS_WITH_AS(c.parse(bad, "cfg"), doctest::Contains("cfg:1"), InvalidArgument);
  CHECK_THROWS_AS(c.load("/nonexistent.cfg"), IoError);
}

TEST_CASE("validation") {
  RunConfig c;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);  // no command
  c.set("command", "fig2");
  c.set("m-list", "2,1");
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("strictly increasing"), InvalidArgument);
  c.set("m-list", "1,2");
  CHECK_NOTHROW(c.validate());
  c.set("command", "bound3d");
  c.set("q", "1.6");
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  CHECK_THROWS_AS(c.set("potential", "cubic"), InvalidArgument);
  CHECK_THROWS_AS(c.set("command", "plot"), InvalidArgument);
}

TEST_CASE("fig1 rows respect the bound and carry the documented columns") {
  RunConfig c;
  c.set("command", "fig1");
  c.set("beta-list", "0.5,2");
  c.set("potential", "exp");
  sweep::RunSummary s;
  const std::string out = run_to_string(c, &s);
  CHECK(s.rows == 2);
  CHECK(s.failures == 0);
  CHECK(out.find("# schema-version: 1") != std::string::npos);
  CHECK(out.find("potential,beta,gc_exact,gc_lower_bound,ratio,q_opt,exact_refinement_delta,"
                 "status") != std::string::npos);
  std::istringstream in(out);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.rfind("exp,", 0) != 0) continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    REQUIRE(f.size() == 8);
    const double exact = std::stod(f[2]), bound = std::stod(f[3]), ratio = std::stod(f[4]);
    CHECK(bound <= exact);
    CHECK(ratio > 0.0);
    CHECK(ratio <= 1.0);
    ++rows;
  }
  CHECK(rows == 2);
}

TEST_CASE("sweeps are deterministic across worker counts") {
  RunConfig c;
  c.set("command", "fig2");
  c.set("g-list", "0.5,2");
  c.set("m-list", "1,2");
  setenv("SALPETER_WORKERS", "1", 1);
  const std::string a = run_to_string(c);
  setenv("SALPETER_WORKERS", "4", 1);
  const std::string b = run_to_string(c);
  unsetenv("SALPETER_WORKERS");
  CHECK(a == b);
}

TEST_CASE("per-row failures are recorded and the sweep continues") {
  RunConfig c;
  c.set("command", "fig2");
  c.set("potential", "exp");  // not confining; still a valid row
  c.set("g-list", "1");
  c.set("m-list", "1");
  sweep::RunSummary s;
  run_to_string(c, &s);
  CHECK(s.rows == 1);

  RunConfig bad;
  bad.set("command", "fig1");
  bad.set("potential", "table:" + std::string(SALPETER_TEST_DATA) + "/yukawa.txt");
  bad.set("beta-list", "1,2");
  const std::string out = run_to_string(bad, &s);
  CHECK(s.rows == 2);
  CHECK(s.failures == 2);
  CHECK(out.find("potential out of class") != std::string::npos);
}

TEST_CASE("single-point reports") {
  RunConfig c;
  c.set("command", "solve");
  c.set("potential", "zero");
  c.set("L", "10");
  c.set("N", "64");
  const std::string out = run_to_string(c);
  CHECK(out.find("2.096374054 GeV") != std::string::npos);

  RunConfig y;
  y.set("command", "bound3d");
  y.set("potential", "table:" + std::string(SALPETER_TEST_DATA) + "/yukawa.txt");
  CHECK_THROWS_AS(run_to_string(y), OutOfClassError);

  RunConfig k;
  k.set("command", "confining");
  k.set("potential", "log");
  k.set("R", "2.5");
  k.set("g", "0.5");
  CHECK(run_to_string(k).find("root found              yes") != std::string::npos);
}

TEST_CASE("parallel_for visits every index once") {
  std::vector<int> hits(1000, 0);
  sweep::parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
}

}
