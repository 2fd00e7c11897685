// jordanian: emit matrices and relations, run verification suites, write reports.
//
//   jordanian emit r-matrix --lambda l --mu m --format json
//   jordanian verify ybe
//   jordanian verify all --at "h=1,s=2,lambda=3,mu=5,nu=7"
//   jordanian report --output report.json
//
// Exit codes: 0 all identities pass, 1 some identity fails, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jordanian/error.hpp"
#include "jordanian/suites.hpp"

namespace {

using namespace jordanian;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  ConfigInput input;
  std::string format = "json";
  std::string output;
  std::size_t max_sector_dim = EngineOptions{}.max_sector_dim;
  std::string target;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--lambda", o.input.lambda, "colour lambda (scalar expression)");
  cmd->add_option("--mu", o.input.mu, "colour mu");
  cmd->add_option("--nu", o.input.nu, "colour nu");
  cmd->add_option("--eta", o.input.eta, "colour eta of the fundamental representation");
  cmd->add_option("--at", o.input.at, "comma-separated bindings, e.g. h=1,s=2,lambda=3");
  cmd->add_option("--format", o.format, "json, latex or plain")->check(CLI::IsMember({"json", "latex", "plain"}));
  cmd->add_option("--output", o.output, "write to this file instead of stdout");
  cmd->add_option("--max-sector-dim", o.max_sector_dim, "largest word-basis sector the engine enumerates")
      ->check(CLI::PositiveNumber);
}

OutputFormat format_of(const std::string& f) {
  if (f == "latex") return OutputFormat::latex;
  if (f == "plain") return OutputFormat::plain;
  return OutputFormat::json;
}

int write(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return kPass;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kUsage;
  }
  return kPass;
}

SuiteConfig config_of(const Options& o) {
  EngineOptions engine;
  engine.max_sector_dim = o.max_sector_dim;
  return make_config(o.input, engine);
}

int run(int argc, char** argv) {
  CLI::App app{"Coloured Jordanian quantum group: exact construction and verification"};
  app.require_subcommand(1);

  Options emit_opts;
  CLI::App* emit_cmd = app.add_subcommand("emit", "print a matrix, the relations or the quantum determinant");
  emit_cmd->add_option("target", emit_opts.target,
                       "r-matrix, braid, universal-r, representation, relations or determinant")
      ->required();
  add_common(emit_cmd, emit_opts);

  Options verify_opts;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite and print its report");
  verify_cmd->add_option("suite", verify_opts.target,
                         "ybe, braid, unitarity, char-eq, hopf, quasitriangular, classical, rtt, determinant or all")
      ->required();
  add_common(verify_cmd, verify_opts);

  Options report_opts;
  CLI::App* report_cmd = app.add_subcommand("report", "run every suite and print a per-suite summary");
  add_common(report_cmd, report_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (emit_cmd->parsed()) {
      if (!is_emit_target(emit_opts.target)) {
        std::cerr << "error: unknown emit target '" << emit_opts.target << "'\n";
        return kUsage;
      }
      const SuiteConfig cfg = config_of(emit_opts);
      return write(emit(emit_opts.target, cfg, format_of(emit_opts.format)), emit_opts.output);
    }
    if (verify_cmd->parsed()) {
      if (verify_opts.target != "all" && !is_suite(verify_opts.target)) {
        std::cerr << "error: unknown suite '" << verify_opts.target << "'\n";
        return kUsage;
      }
      const SuiteConfig cfg = config_of(verify_opts);
      const VerificationReport report = run_suite(verify_opts.target, cfg);
      const int code = write(format_report(report, format_of(verify_opts.format)), verify_opts.output);
      if (code != kPass) return code;
      return report.all_pass() ? kPass : kFail;
    }
    const SuiteConfig cfg = config_of(report_opts);
    std::vector<VerificationReport> reports;
    for (const auto& s : suite_names()) reports.push_back(run_suite(s, cfg));
    const nlohmann::json summary = summary_json(cfg, suite_names(), reports);
    std::string text;
    if (report_opts.format == "json") {
      text = summary.dump(2) + "\n";
    } else {
      for (std::size_t i = 0; i < reports.size(); ++i) {
        text += suite_names()[i] + ": " + (reports[i].all_pass() ? "pass" : "fail") + " (" +
                std::to_string(reports[i].size() - reports[i].failures()) + "/" + std::to_string(reports[i].size()) +
                ")\n";
      }
    }
    const int code = write(text, report_opts.output);
    if (code != kPass) return code;
    return summary["status"] == "pass" ? kPass : kFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
