// End-to-end checks of the qskein command-line verifier: flag validation,
// exit codes, report shape, and byte-level determinism of repeated runs.
#include "doctest.h"

#include "cli/cli.hpp"
#include "json.hpp"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

std::string binary_path() { return std::string(QSKEIN_BIN_DIR) + "/qskein"; }

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_binary(const std::string& args) {
  std::string cmd = "'" + binary_path() + "' " + args + " 2>/dev/null";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("single cheap suite produces a passing json report on stdout") {
  RunResult r = run_binary("--suite skein-s03 --report json");
  CHECK(r.exit_code == 0);
  nlohmann::json rep = nlohmann::json::parse(r.out);
  CHECK(rep.at("version") == "1.0.0");
  CHECK(rep.at("pass") == true);
  CHECK(rep.at("total_millis") == 0);
  CHECK(rep.at("config").at("suite") == "skein-s03");
  CHECK(rep.at("config").at("gamma-range") == 5);
  CHECK(rep.at("config").at("basis-depth") == 12);
  CHECK(rep.at("config").at("mode") == "symbolic");
  CHECK(rep.at("config").at("out") == "-");
  REQUIRE(rep.at("suites").size() == 1);
  const nlohmann::json& suite = rep.at("suites").at(0);
  CHECK(suite.at("name") == "skein-s03");
  REQUIRE(suite.at("checks").size() == 5);
  for (const nlohmann::json& c : suite.at("checks")) {
    CHECK(c.at("pass") == true);
    CHECK(c.at("millis") == 0);
    CHECK(c.at("residual_text") == "0");
    CHECK(c.at("tier") == "operator-identity");
  }
  CHECK(suite.at("constants").contains("q"));
}

TEST_CASE("invalid invocations exit with code 2") {
  CHECK(run_binary("--suite no-such-suite").exit_code == 2);
  CHECK(run_binary("--mode sideways").exit_code == 2);
  CHECK(run_binary("--report yaml").exit_code == 2);
  CHECK(run_binary("--gamma-range 0").exit_code == 2);
  CHECK(run_binary("--basis-depth 3").exit_code == 2);
  CHECK(run_binary("--no-such-flag").exit_code == 2);
  CHECK(run_binary("--out /nonexistent-dir/report.json --suite skein-s03").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
  RunResult r = run_binary("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("--suite") != std::string::npos);
}

TEST_CASE("repeated runs with one configuration are byte-identical") {
  const std::string args = "--suite monopole-jordan --mode random --seed 11 --report json";
  RunResult a = run_binary(args);
  RunResult b = run_binary(args);
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}

TEST_CASE("report goes to the --out path when given") {
  std::string path = std::string(QSKEIN_BIN_DIR) + "/cli_test_report.json";
  RunResult r = run_binary("--suite monopole-jordan --mode random --seed 3 --out '" + path + "'");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  FILE* f = fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string content;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) content.append(buf.data(), n);
  fclose(f);
  std::remove(path.c_str());
  nlohmann::json rep = nlohmann::json::parse(content);
  CHECK(rep.at("pass") == true);
  CHECK(rep.at("config").at("out") == path);
}

TEST_CASE("text report renders pass lines") {
  RunResult r = run_binary("--suite skein-s03 --report text");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("qskein report 1.0.0") != std::string::npos);
  CHECK(r.out.find("suite skein-s03: PASS") != std::string::npos);
  CHECK(r.out.find("result: PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("gamma range controls the number of family checks") {
  RunResult small = run_binary("--suite theorem-s11 --mode random --seed 5 --gamma-range 2");
  RunResult large = run_binary("--suite theorem-s11 --mode random --seed 5 --gamma-range 3");
  CHECK(small.exit_code == 0);
  CHECK(large.exit_code == 0);
  auto count = [](const RunResult& r) {
    return nlohmann::json::parse(r.out).at("suites").at(0).at("checks").size();
  };
  CHECK(count(small) < count(large));
}

TEST_CASE("config errors from the library surface as ConfigError") {
  cli::RunConfig cfg;
  cfg.suite = "bogus";
  CHECK_THROWS_AS(cli::run_report(cfg), cli::ConfigError);
  cfg = cli::RunConfig{};
  cfg.mode = "bogus";
  CHECK_THROWS_AS(cli::run_report(cfg), cli::ConfigError);
  cfg = cli::RunConfig{};
  cfg.gamma_range = 0;
  CHECK_THROWS_AS(cli::run_report(cfg), cli::ConfigError);
  cfg = cli::RunConfig{};
  cfg.basis_depth = 2;
  CHECK_THROWS_AS(cli::run_report(cfg), cli::ConfigError);
  cfg = cli::RunConfig{};
  cfg.report = "bogus";
  CHECK_THROWS_AS(cli::run_report(cfg), cli::ConfigError);
}

TEST_CASE("suite registry lists the fixed verification order") {
  const std::vector<std::string> expected{
      "daha-cc",      "daha-a1",        "skein-s03",   "skein-s04",  "skein-s11",
      "monopole-s04", "monopole-jordan", "theorem-s04", "theorem-s11"};
  CHECK(cli::suite_names() == expected);
}
