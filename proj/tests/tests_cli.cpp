#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qs/json_io.hpp"
#include "qs/suites.hpp"

namespace {

int run_cmd(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

nlohmann::json load(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  nlohmann::json j;
  f >> j;
  return j;
}

std::string tmpfile(const std::string& name) { return "/tmp/qs_cli_" + name; }

}  // namespace

TEST_CASE("runner results match between serial and parallel") {
  auto spec = qs::suites::build_suite("sdp", 2, 3);
  const auto a = qs::suites::run_serial(spec.cases);
  const auto b = qs::suites::run_parallel(spec.cases, 4);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].pass == b[i].pass);
    CHECK(a[i].expected == b[i].expected);
    CHECK(a[i].got == b[i].got);
  }
  CHECK(qs::suites::count_failures(a) == 0);
}

TEST_CASE("sampling is deterministic and sorted") {
  const auto s1 = qs::suites::sample_indices(1000, 50, 99);
  const auto s2 = qs::suites::sample_indices(1000, 50, 99);
  CHECK(s1 == s2);
  CHECK(std::is_sorted(s1.begin(), s1.end()));
  CHECK(s1.size() == 50);
  const auto s3 = qs::suites::sample_indices(1000, 50, 100);
  CHECK(s1 != s3);
  CHECK(qs::suites::sample_indices(10, 20, 1).size() == 10);
}

TEST_CASE("cli exit codes and usage errors") {
  const std::string bin = VERIFY_BIN;
  CHECK(run_cmd(bin + " --suite sdp --n 0 --r 2 >/dev/null 2>&1") == 2);
  CHECK(run_cmd(bin + " --suite nosuch --n 2 --r 2 >/dev/null 2>&1") == 2);
  CHECK(run_cmd(bin + " >/dev/null 2>&1") == 2);
  CHECK(run_cmd(bin + " --suite hecke-relations --n 1 --r 3 --out " + tmpfile("rel.json") +
                " >/dev/null") == 0);
}

TEST_CASE("cli reports are schema-valid and deterministic up to timing") {
  const std::string bin = VERIFY_BIN;
  const std::string p1 = tmpfile("a.json"), p2 = tmpfile("b.json");
  REQUIRE(run_cmd(bin + " --suite basis --n 2 --r 2 --jobs 1 --out " + p1 + " >/dev/null") == 0);
  REQUIRE(run_cmd(bin + " --suite basis --n 2 --r 2 --jobs 4 --out " + p2 + " >/dev/null") == 0);
  nlohmann::json a = load(p1), b = load(p2);
  for (const char* key : {"suite", "n", "r", "cases", "failures", "elapsed_ms"}) {
    CHECK(a.contains(key));
    CHECK(b.contains(key));
  }
  CHECK(a["suite"] == "basis");
  CHECK(a["failures"].is_array());
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  CHECK(a == b);
}

TEST_CASE("cli query subcommand") {
  const std::string bin = VERIFY_BIN;
  const std::string bpath = tmpfile("B.json"), apath = tmpfile("A.json");
  {
    std::ofstream fb(bpath);
    fb << R"({"n":1,"a0":[[0]],"a1":[[1]]})";
    std::ofstream fa(apath);
    fa << R"({"n":1,"a0":[[0]],"a1":[[1]]})";
  }
  const std::string out = tmpfile("q.json");
  REQUIRE(run_cmd(bin + " query " + bpath + " " + apath + " > " + out) == 0);
  const nlohmann::json j = load(out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["a0"] == nlohmann::json::array({{1}}));
  CHECK(j[0]["coeff"]["0"] == -1);

  // mismatched shapes: empty vector, exit 0
  const std::string cpath = tmpfile("C.json");
  {
    std::ofstream fc(cpath);
    fc << R"({"n":2,"a0":[[2,0],[0,0]],"a1":[[0,0],[0,0]]})";
  }
  const std::string dpath = tmpfile("D.json");
  {
    std::ofstream fd(dpath);
    fd << R"({"n":2,"a0":[[0,0],[0,2]],"a1":[[0,0],[0,0]]})";
  }
  REQUIRE(run_cmd(bin + " query " + cpath + " " + dpath + " > " + out) == 0);
  CHECK(load(out).empty());

  // parse errors exit 2
  {
    std::ofstream fb(bpath);
    fb << R"({"n":1,"a0":[[0]]})";
  }
  CHECK(run_cmd(bin + " query " + bpath + " " + apath + " >/dev/null 2>&1") == 2);
  CHECK(run_cmd(bin + " query /nonexistent.json " + apath + " >/dev/null 2>&1") == 2);
}
