// Benchmark comparing the serial reference runner against the OpenMP runner
// on one suite, verifying that both produce the same results.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qs/suites.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel suite benchmark"};
  std::string suite = "even";
  int n = 2, r = 3, jobs = 0;
  app.add_option("--suite", suite, "suite to time");
  app.add_option("--n", n, "matrix size");
  app.add_option("--r", r, "rank");
  app.add_option("--jobs", jobs, "threads for the parallel run (default: all cores)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (jobs == 0) {
#ifdef _OPENMP
    jobs = omp_get_max_threads();
#else
    jobs = 1;
#endif
  }

  using clock = std::chrono::steady_clock;
  qs::suites::SuiteSpec spec = qs::suites::build_suite(suite, n, r);
  std::cout << "suite=" << suite << " n=" << n << " r=" << r << " cases=" << spec.cases.size()
            << "\n";

  const auto t0 = clock::now();
  const auto serial = qs::suites::run_serial(spec.cases);
  const double ts = std::chrono::duration<double>(clock::now() - t0).count();

  const auto t1 = clock::now();
  const auto parallel = qs::suites::run_parallel(spec.cases, jobs);
  const double tp = std::chrono::duration<double>(clock::now() - t1).count();

  bool same = serial.size() == parallel.size();
  for (size_t i = 0; same && i < serial.size(); ++i)
    same = serial[i].pass == parallel[i].pass && serial[i].expected == parallel[i].expected &&
           serial[i].got == parallel[i].got;

  std::cout << "serial   : " << ts << " s  (failures=" << qs::suites::count_failures(serial)
            << ")\n";
  std::cout << "parallel : " << tp << " s  (jobs=" << jobs
            << ", failures=" << qs::suites::count_failures(parallel) << ")\n";
  if (tp > 0) std::cout << "speedup  : " << ts / tp << "x\n";
  std::cout << "results identical: " << (same ? "yes" : "NO") << "\n";
  return same ? 0 : 1;
}
