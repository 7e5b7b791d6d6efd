#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli/cli.hpp"

namespace cli {

std::string render_text(const nlohmann::ordered_json& report) {
  std::ostringstream os;
  os << "qskein report " << report.at("version").get<std::string>() << "\n";
  const auto& cfg = report.at("config");
  os << "config: suite=" << cfg.at("suite").get<std::string>()
     << " gamma-range=" << cfg.at("gamma-range").get<int>()
     << " basis-depth=" << cfg.at("basis-depth").get<int>()
     << " mode=" << cfg.at("mode").get<std::string>()
     << " seed=" << cfg.at("seed").get<std::uint64_t>()
     << " report=" << cfg.at("report").get<std::string>()
     << " out=" << cfg.at("out").get<std::string>() << "\n";
  for (const auto& suite : report.at("suites")) {
    bool suite_pass = true;
    for (const auto& c : suite.at("checks"))
      if (!c.at("pass").get<bool>()) suite_pass = false;
    os << "suite " << suite.at("name").get<std::string>() << ": "
       << (suite_pass ? "PASS" : "FAIL") << "\n";
    for (const auto& c : suite.at("checks")) {
      os << "  [" << (c.at("pass").get<bool>() ? "PASS" : "FAIL") << "] "
         << c.at("desc").get<std::string>() << " (tier=" << c.at("tier").get<std::string>()
         << ", millis=" << c.at("millis").get<long long>() << ")\n";
      if (!c.at("pass").get<bool>())
        os << "    residual: " << c.at("residual_text").get<std::string>() << "\n";
    }
    for (const auto& [key, value] : suite.at("constants").items())
      os << "  constant " << key << " = " << value.get<std::string>() << "\n";
  }
  os << "total_millis: " << report.at("total_millis").get<long long>() << "\n";
  os << "result: " << (report.at("pass").get<bool>() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

int run_cli(int argc, const char* const* argv) {
  RunConfig cfg;
  CLI::App app{"Exact operator-identity verification suites for quantized character varieties"};
  std::vector<std::string> allowed = suite_names();
  allowed.push_back("all");
  app.add_option("--suite", cfg.suite, "Suite to run")
      ->capture_default_str()
      ->check(CLI::IsMember(allowed));
  app.add_option("--gamma-range", cfg.gamma_range, "Curve families cover |n| <= N")
      ->capture_default_str()
      ->check(CLI::Range(1, 1 << 20));
  app.add_option("--basis-depth", cfg.basis_depth, "Symmetric-basis agreement depth")
      ->capture_default_str()
      ->check(CLI::Range(4, 1 << 20));
  app.add_option("--mode", cfg.mode, "Parameter mode")
      ->capture_default_str()
      ->check(CLI::IsMember({"symbolic", "random"}));
  app.add_option("--seed", cfg.seed, "Random-mode seed")->capture_default_str();
  app.add_option("--report", cfg.report, "Report format")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", cfg.out, "Report output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  nlohmann::ordered_json report;
  try {
    report = run_report(cfg);
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();

  std::string rendered =
      cfg.report == "json" ? report.dump(2) + "\n" : render_text(report);
  if (cfg.out.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open output path: " << cfg.out << "\n";
      return 2;
    }
    f << rendered;
  }
  std::cerr << "wall-clock: " << wall << " ms\n";
  return report.at("pass").get<bool>() ? 0 : 1;
}

}  // namespace cli
