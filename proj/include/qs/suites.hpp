#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qs/json_io.hpp"

namespace qs::suites {

struct CaseResult {
  bool pass = true;
  ordered_json expected;  // filled on failure
  ordered_json got;
  std::string note;
};

struct Case {
  std::string key;
  ordered_json input;
  std::function<CaseResult()> run;
};

struct SuiteSpec {
  std::string name;
  int n = 0, r = 0;
  std::vector<Case> cases;
  std::shared_ptr<void> context;  // keeps shared caches alive for the closures
};

// Suites exposed by the CLI, in reporting order.
const std::vector<std::string>& suite_names();

// Builds the full deterministic case list. All shared caches are constructed
// here; case closures only read them, so runs may be distributed over threads.
SuiteSpec build_suite(const std::string& name, int n, int r);

// q = 1 degeneration checks (commutators vanish, independent Sergeev model
// agrees). Used by the acceptance harness.
SuiteSpec build_q1_suite(int n, int r, bool with_sergeev_products);

// Serial reference runner and the OpenMP runner; both return results in case
// order, so reports are identical whichever executes them.
std::vector<CaseResult> run_serial(const std::vector<Case>& cases);
std::vector<CaseResult> run_parallel(const std::vector<Case>& cases, int jobs);

// Deterministic k-subset of [0, population), sorted ascending.
std::vector<size_t> sample_indices(size_t population, size_t k, uint64_t seed);

struct SampleInfo {
  size_t population = 0;
  size_t size = 0;
  uint64_t seed = 0;
};

ordered_json make_report(const SuiteSpec& spec, const std::vector<CaseResult>& results,
                         long elapsed_ms, const SampleInfo* sample);

size_t count_failures(const std::vector<CaseResult>& results);

}  // namespace qs::suites
