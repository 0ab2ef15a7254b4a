// Acceptance harness: runs each verification criterion at its pinned size and
// prints one PASS/FAIL line per criterion. Usage: acceptance [NN ...] with NN
// in 01..12; no arguments runs everything. Exit code 0 iff all selected pass.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qs/json_io.hpp"
#include "qs/qschur.hpp"
#include "qs/solve.hpp"
#include "qs/suites.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using qs::suites::build_q1_suite;
using qs::suites::build_suite;
using qs::suites::count_failures;
using qs::suites::run_parallel;
using qs::suites::sample_indices;
using qs::suites::SuiteSpec;

int g_jobs = 1;

struct Outcome {
  size_t cases = 0;
  size_t failures = 0;
  std::vector<std::string> failed_keys;
};

Outcome run_spec(SuiteSpec spec) {
  Outcome o;
  o.cases = spec.cases.size();
  const auto results = run_parallel(spec.cases, g_jobs);
  o.failures = count_failures(results);
  for (size_t i = 0; i < results.size() && o.failed_keys.size() < 5; ++i)
    if (!results[i].pass) o.failed_keys.push_back(spec.cases[i].key);
  return o;
}

Outcome run_spec_sampled(SuiteSpec spec, size_t want, uint64_t seed) {
  std::vector<qs::suites::Case> chosen;
  for (size_t i : sample_indices(spec.cases.size(), want, seed))
    chosen.push_back(std::move(spec.cases[i]));
  spec.cases = std::move(chosen);
  return run_spec(std::move(spec));
}

Outcome operator+(Outcome a, const Outcome& b) {
  a.cases += b.cases;
  a.failures += b.failures;
  for (const auto& k : b.failed_keys)
    if (a.failed_keys.size() < 5) a.failed_keys.push_back(k);
  return a;
}

// 1. Defining relations and inverse identities, r <= 5.
Outcome criterion_01() {
  Outcome o;
  for (int r = 1; r <= 5; ++r) o = o + run_spec(build_suite("hecke-relations", 1, r));
  return o;
}

// 2. Basis structure: transition triangularity r <= 3; linear independence of
// the standard basis for n <= 2, r <= 3 and n = 3, r <= 2.
Outcome criterion_02() {
  Outcome o;
  for (int r = 1; r <= 3; ++r) o = o + run_spec(build_suite("basis", 2, r));
  for (int r = 1; r <= 2; ++r) o = o + run_spec(build_suite("basis", 3, r));
  return o;
}

// 3. d_A machinery for n <= 3, r <= 5 (words, lengths, round trips).
Outcome criterion_03() {
  Outcome o;
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 5; ++r) {
      SuiteSpec spec = build_suite("sdp", n, r);
      std::vector<qs::suites::Case> keep;
      for (auto& c : spec.cases)
        if (c.key.rfind("word/", 0) == 0 || c.key.rfind("zigzag/", 0) == 0)
          keep.push_back(std::move(c));
      spec.cases = std::move(keep);
      o = o + run_spec(std::move(spec));
    }
  return o;
}

// 4. SDP shape criterion vs algebraic commutation, n <= 3, r <= 4.
Outcome criterion_04() {
  Outcome o;
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 4; ++r) {
      SuiteSpec spec = build_suite("sdp", n, r);
      std::vector<qs::suites::Case> keep;
      for (auto& c : spec.cases)
        if (c.key.rfind("shape-vs-commute/", 0) == 0 || c.key.rfind("oneblock/", 0) == 0 ||
            c.key.rfind("zigzag/", 0) == 0)
          keep.push_back(std::move(c));
      spec.cases = std::move(keep);
      o = o + run_spec(std::move(spec));
    }
  return o;
}

// 5. Commutation lemmas as exact identities, n <= 3, r <= 4 (plus the
// descending c-commutation at r = 5).
Outcome criterion_05() {
  Outcome o;
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 4; ++r) o = o + run_spec(build_suite("hecke-lemmas", n, r));
  {
    SuiteSpec spec = build_suite("hecke-lemmas", 1, 5);
    std::vector<qs::suites::Case> keep;
    for (auto& c : spec.cases)
      if (c.key.rfind("c-descending/", 0) == 0) keep.push_back(std::move(c));
    spec.cases = std::move(keep);
    o = o + run_spec(std::move(spec));
  }
  return o;
}

// 6. Even multiplication formulas equal the oracle: exhaustive n <= 3, r <= 4,
// plus n = 2, r = 5 with at least 1000 cases.
Outcome criterion_06() {
  Outcome o;
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 4; ++r) o = o + run_spec(build_suite("even", n, r));
  o = o + run_spec(build_suite("even", 2, 5));  // 1440 cases, covers the sampling bar
  return o;
}

// 7. Odd head formulas equal the oracle under the SDP hypotheses:
// exhaustive n <= 3, r <= 3; sampled at r = 4.
Outcome criterion_07() {
  Outcome o;
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r) o = o + run_spec(build_suite("odd-head", n, r));
  for (int n = 1; n <= 3; ++n)
    o = o + run_spec_sampled(build_suite("odd-head", n, 4), 500, 20240810);
  return o;
}

// 8. Odd tails live strictly below the shifted bases; products are parity
// homogeneous. Exhaustive n <= 3, r <= 3.
Outcome criterion_08() {
  Outcome o;
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r) o = o + run_spec(build_suite("odd-tail", n, r));
  return o;
}

// 9. Special products and the mixed four-product relation, n <= 3, r <= 4.
Outcome criterion_09() {
  Outcome o;
  for (int n = 2; n <= 3; ++n)
    for (int r = 1; r <= 4; ++r) o = o + run_spec(build_suite("special", n, r));
  return o;
}

// 10. Appendix head identity and the even-lower middle identity, n <= 3, r <= 4.
Outcome criterion_10() {
  Outcome o;
  for (int n = 2; n <= 3; ++n)
    for (int r = 1; r <= 4; ++r) o = o + run_spec(build_suite("appendix", n, r));
  return o;
}

// 11. q = 1 degeneration: commutators vanish for n <= 3, r <= 4; the
// independent Sergeev model reproduces products (small sizes); structure
// constants specialize to integers by exactness of the solver.
Outcome criterion_11() {
  Outcome o;
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 4; ++r) o = o + run_spec(build_q1_suite(n, r, false));
  for (int r = 1; r <= 3; ++r) o = o + run_spec(build_q1_suite(2, r, true));
  o = o + run_spec(build_q1_suite(3, 2, true));
  return o;
}

// 12. CLI contract: `verify --suite all --n 2 --r 3` exits 0 with a
// deterministic schema-valid report; malformed input exits 2.
Outcome criterion_12() {
  Outcome o;
  auto shell = [](const std::string& cmd) {
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  };
  const std::string bin = VERIFY_BIN;
  auto expect = [&](bool ok, const std::string& what) {
    ++o.cases;
    if (!ok) {
      ++o.failures;
      o.failed_keys.push_back(what);
    }
  };
  const std::string rep1 = "/tmp/qs_accept_all1.json", rep2 = "/tmp/qs_accept_all2.json";
  expect(shell(bin + " --suite all --n 2 --r 3 --jobs 1 --out " + rep1 + " >/dev/null") == 0,
         "suite all exits 0");
  expect(shell(bin + " --suite all --n 2 --r 3 --jobs 2 --out " + rep2 + " >/dev/null") == 0,
         "suite all exits 0 (parallel)");
  try {
    std::ifstream f1(rep1), f2(rep2);
    nlohmann::json a, b;
    f1 >> a;
    f2 >> b;
    bool schema = true;
    for (const char* key : {"suite", "n", "r", "cases", "failures", "elapsed_ms"})
      schema = schema && a.contains(key);
    expect(schema, "report schema");
    expect(a["failures"].is_array() && a["failures"].empty(), "zero failures");
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    if (a.contains("sections"))
      for (auto* j : {&a, &b})
        for (auto& sec : (*j)["sections"]) sec.erase("elapsed_ms");
    expect(a == b, "deterministic report");
  } catch (const std::exception& e) {
    expect(false, std::string("report parse: ") + e.what());
  }
  expect(shell(bin + " --suite all --n 0 --r 3 >/dev/null 2>&1") == 2, "bad n exits 2");
  expect(shell(bin + " --suite even --n 2 >/dev/null 2>&1") == 2, "missing r exits 2");
  expect(shell(bin + " query /nonexistent.json /nonexistent.json >/dev/null 2>&1") == 2,
         "bad query exits 2");
  return o;
}

struct Criterion {
  const char* id;
  const char* label;
  Outcome (*fn)();
};

const Criterion kCriteria[] = {
    {"01", "defining relations and inverses (r <= 5)", criterion_01},
    {"02", "basis transition and independence", criterion_02},
    {"03", "double coset words and permutations (n <= 3, r <= 5)", criterion_03},
    {"04", "SDP shape criterion equivalence (n <= 3, r <= 4)", criterion_04},
    {"05", "commutation lemmas (n <= 3, r <= 4)", criterion_05},
    {"06", "even formulas vs oracle (n <= 3, r <= 4; n = 2, r = 5)", criterion_06},
    {"07", "odd heads vs oracle under SDP (r <= 3; sampled r = 4)", criterion_07},
    {"08", "odd tails below shifted bases (n <= 3, r <= 3)", criterion_08},
    {"09", "special products and mixed relation (n <= 3, r <= 4)", criterion_09},
    {"10", "head and middle identities (n <= 3, r <= 4)", criterion_10},
    {"11", "q = 1 degeneration (n <= 3, r <= 4)", criterion_11},
    {"12", "CLI contract", criterion_12},
};

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
  g_jobs = omp_get_max_threads();
#endif
  std::vector<std::string> want;
  for (int i = 1; i < argc; ++i) want.emplace_back(argv[i]);

  bool all_pass = true;
  for (const Criterion& c : kCriteria) {
    if (!want.empty()) {
      bool selected = false;
      for (const auto& w : want) selected = selected || w == c.id;
      if (!selected) continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o.failures += 1;
      o.failed_keys.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.failures == 0;
    all_pass = all_pass && pass;
    std::printf("C%s %-58s %s (%zu cases, %.1fs)\n", c.id, c.label, pass ? "PASS" : "FAIL",
                o.cases, secs);
    for (const auto& k : o.failed_keys) std::printf("      failed: %s\n", k.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
