#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "jordanian/expression.hpp"
#include "jordanian/parameters.hpp"
#include "jordanian/report.hpp"
#include "jordanian/sector.hpp"

namespace jordanian {

// Colours, deformation values and engine limits shared by every suite.
struct SuiteConfig {
  Colour lambda = colour("lambda");
  Colour mu = colour("mu");
  Colour nu = colour("nu");
  Colour eta = colour("eta");
  Deformation p;
  EngineOptions engine;
  bool degree_four = true;
};

// Raw text inputs: colour strings (empty means the default symbol) and a
// comma-separated binding list such as "h=1,s=2,lambda=3". Bindings are
// applied to the deformation parameters and to every colour. Throws
// ParseError or Error on malformed input.
struct ConfigInput {
  std::string lambda, mu, nu, eta;
  std::string at;
};

std::map<Symbol, Scalar> parse_bindings(const std::string& at);
SuiteConfig make_config(const ConfigInput& input, const EngineOptions& engine = {});

// Sorted suite names, without "all".
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Runs one suite, or every suite in name order when name is "all" (each
// identity then carries a "suite: " prefix). Throws Error on an unknown name.
VerificationReport run_suite(const std::string& name, const SuiteConfig& config);

// Emission targets, sorted.
const std::vector<std::string>& emit_targets();
bool is_emit_target(const std::string& name);

enum class OutputFormat { json, latex, plain };

// Deterministic text of an emission target in the given format.
std::string emit(const std::string& target, const SuiteConfig& config, OutputFormat format);

// Text of a report: the JSON report list, a LaTeX itemize, or one
// "PASS|FAIL identity" line per check.
std::string format_report(const VerificationReport& report, OutputFormat format);

// Per-suite summary object for the report command.
nlohmann::json summary_json(const SuiteConfig& config, const std::vector<std::string>& suites,
                            const std::vector<VerificationReport>& reports);

}  // namespace jordanian
