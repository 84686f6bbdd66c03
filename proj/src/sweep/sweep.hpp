#pragma once

#include <cstddef>
#include <functional>
#include <ostream>

#include "sweep/config.hpp"

namespace salpeter::sweep {

constexpr int kSchemaVersion = 1;

struct RunSummary {
  std::size_t rows = 0;
  std::size_t failures = 0;  // rows whose computation raised an error
};

// Worker count from SALPETER_WORKERS, else the available parallelism.
int worker_count();

// Calls task(i) for i in [0, n) on up to `workers` threads.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& task);

// Runs the configured command. Single-point commands print a text report to
// `report` and throw on failure; sweeps record per-row errors and keep going.
// CSV goes to cfg.output when set, otherwise to `report` (sweeps only).
RunSummary run(const RunConfig& cfg, std::ostream& report);

}  // namespace salpeter::sweep
