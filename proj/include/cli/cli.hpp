#pragma once
// Command-line front end: suite selection, mode-dependent parameter
// valuations, and deterministic JSON/text reporting.  All timing fields in
// reports are fixed at 0 so identical configurations produce byte-identical
// reports; wall-clock timing is written to standard error instead.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "exactring/exactring.hpp"
#include "json.hpp"
#include "theoremsuite/theoremsuite.hpp"

namespace cli {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& m) : std::runtime_error("ConfigError: " + m) {}
};

struct RunConfig {
  std::string suite = "all";
  int gamma_range = 5;   // curve families run over |n| <= gamma_range (>= 1)
  int basis_depth = 12;  // symmetric-basis agreement depth (>= 4)
  std::string mode = "symbolic";  // "symbolic" | "random"
  std::uint64_t seed = 0;         // random mode: shuffles the prime pool
  std::string report = "json";    // "json" | "text"
  std::string out;                // report path; empty writes to stdout
};

// The runnable suites in fixed execution order (excluding "all").
const std::vector<std::string>& suite_names();

// Parameter valuations for the configured mode: fully symbolic, or distinct
// primes for (t1..t4) resp. th drawn from a pool shuffled by the seed.  The
// shift symbol qh always stays symbolic.
exactring::Valuation cc_valuation(const RunConfig& cfg);
exactring::Valuation a1_valuation(const RunConfig& cfg);

// Run one suite by name; throws ConfigError for an unknown name.
theoremsuite::TheoremCheck run_suite(const std::string& name, const RunConfig& cfg);

// Execute the configured selection and assemble the full report object:
// {version, config, suites: [...], total_millis, pass}.
nlohmann::ordered_json run_report(const RunConfig& cfg);

// Lossless text rendering of a JSON report.
std::string render_text(const nlohmann::ordered_json& report);

// Parse argv, run, write the report; returns the process exit status:
// 0 all checks pass, 1 some check failed, 2 configuration error.
int run_cli(int argc, const char* const* argv);

}  // namespace cli
