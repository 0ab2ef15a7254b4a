// Command-line front end: runs verification suites over (n, r) and queries
// single structure-constant products. Exit codes: 0 all checks pass, 1 at
// least one mathematical failure, 2 usage or I/O error.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qs/json_io.hpp"
#include "qs/qschur.hpp"
#include "qs/suites.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

constexpr size_t kSamplingCeiling = 200000;  // auto-sample above this many cases

struct SuiteRun {
  qs::ordered_json report;
  size_t failures = 0;
};

SuiteRun run_one(const std::string& name, int n, int r, long long sample, uint64_t seed,
                 int jobs, bool verbose) {
  using clock = std::chrono::steady_clock;
  qs::suites::SuiteSpec spec = qs::suites::build_suite(name, n, r);

  qs::suites::SampleInfo info;
  const qs::suites::SampleInfo* info_ptr = nullptr;
  size_t want = spec.cases.size();
  if (sample > 0) want = static_cast<size_t>(sample);
  if (want > kSamplingCeiling && sample <= 0) want = kSamplingCeiling;
  if (want < spec.cases.size()) {
    info.population = spec.cases.size();
    info.size = want;
    info.seed = seed;
    info_ptr = &info;
    std::vector<qs::suites::Case> chosen;
    for (size_t i : qs::suites::sample_indices(spec.cases.size(), want, seed))
      chosen.push_back(std::move(spec.cases[i]));
    spec.cases = std::move(chosen);
  }

  const auto t0 = clock::now();
  std::vector<qs::suites::CaseResult> results =
      jobs == 1 ? qs::suites::run_serial(spec.cases)
                : qs::suites::run_parallel(spec.cases, jobs);
  const long ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();

  SuiteRun out;
  out.failures = qs::suites::count_failures(results);
  out.report = qs::suites::make_report(spec, results, ms, info_ptr);
  std::cout << "[" << name << "] n=" << n << " r=" << r << " cases=" << spec.cases.size()
            << " failures=" << out.failures << " elapsed_ms=" << ms
            << (out.failures == 0 ? " PASS" : " FAIL") << "\n";
  if (verbose) {
    for (const auto& f : out.report["failures"])
      std::cout << "  failed: " << f["case"].get<std::string>() << "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Hecke-Clifford / queer q-Schur multiplication formulas"};
  app.require_subcommand(0, 1);

  std::string suite;
  int n = 0, r = 0;
  long long sample = 0;
  uint64_t seed = 12345;
  std::string out_path;
  int jobs = 0;
  bool verbose = false;

  app.add_option("--suite", suite,
                 "suite name: hecke-relations, hecke-lemmas, sdp, basis, even, odd-head, "
                 "odd-tail, special, appendix, all");
  app.add_option("--n", n, "matrix size n (>= 1)");
  app.add_option("--r", r, "rank r (1..6)");
  app.add_option("--sample", sample, "random sample size (seeded)");
  app.add_option("--seed", seed, "sampling seed");
  app.add_option("--out", out_path, "write the JSON report here");
  app.add_option("--jobs", jobs, "worker threads (default: all cores)");
  app.add_flag("--verbose", verbose, "list failing cases on stdout");

  CLI::App* query = app.add_subcommand("query", "structure constants of one product");
  std::string bstar_path, astar_path;
  query->add_option("bstar", bstar_path, "JSON file with the left supermatrix")->required();
  query->add_option("astar", astar_path, "JSON file with the right supermatrix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (query->parsed()) {
      nlohmann::json jb, ja;
      std::ifstream fb(bstar_path), fa(astar_path);
      if (!fb || !fa) {
        std::cerr << "cannot open input files\n";
        return 2;
      }
      fb >> jb;
      fa >> ja;
      const qs::SuperMatrix B = qs::supermatrix_from_json(jb);
      const qs::SuperMatrix A = qs::supermatrix_from_json(ja);
      if (B.n != A.n || B.base().total() != A.base().total()) {
        std::cerr << "inconsistent ranks\n";
        return 2;
      }
      qs::OracleCache cache(A.n, A.base().total());
      const qs::PhiVector v = qs::oracle_product(B, A, cache);
      std::cout << qs::phivector_to_json(v).dump(2) << "\n";
      return 0;
    }

    if (suite.empty()) {
      std::cerr << "missing --suite (or use the query subcommand); see --help\n";
      return 2;
    }
    if (n < 1 || r < 1 || r > 6) {
      std::cerr << "--n must be >= 1 and --r in 1..6\n";
      return 2;
    }
    if (jobs < 0) {
      std::cerr << "--jobs must be >= 1\n";
      return 2;
    }
    if (jobs == 0) {
#ifdef _OPENMP
      jobs = omp_get_max_threads();
#else
      jobs = 1;
#endif
    }

    std::vector<std::string> names;
    if (suite == "all")
      names = qs::suites::suite_names();
    else
      names.push_back(suite);
    for (const std::string& s : names) {
      bool known = false;
      for (const std::string& k : qs::suites::suite_names()) known = known || k == s;
      if (!known) {
        std::cerr << "unknown suite: " << s << "\n";
        return 2;
      }
    }

    qs::ordered_json report;
    size_t failures = 0;
    if (names.size() == 1) {
      SuiteRun run = run_one(names[0], n, r, sample, seed, jobs, verbose);
      report = std::move(run.report);
      failures = run.failures;
    } else {
      report["suite"] = "all";
      report["n"] = n;
      report["r"] = r;
      size_t cases = 0;
      qs::ordered_json fails = qs::ordered_json::array();
      long total_ms = 0;
      qs::ordered_json sections = qs::ordered_json::array();
      for (const std::string& s : names) {
        SuiteRun run = run_one(s, n, r, sample, seed, jobs, verbose);
        failures += run.failures;
        cases += run.report["cases"].get<size_t>();
        total_ms += run.report["elapsed_ms"].get<long>();
        for (auto& f : run.report["failures"]) {
          f["suite"] = s;
          fails.push_back(std::move(f));
        }
        sections.push_back(std::move(run.report));
      }
      report["cases"] = cases;
      report["failures"] = std::move(fails);
      report["sections"] = std::move(sections);
      report["elapsed_ms"] = total_ms;
    }

    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
      }
      f << report.dump(2) << "\n";
    } else {
      std::cout << report.dump(2) << "\n";
    }
    return failures == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
