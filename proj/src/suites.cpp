#include "jordanian/suites.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "jordanian/coloured_r.hpp"
#include "jordanian/error.hpp"
#include "jordanian/hopf_structure.hpp"
#include "jordanian/relations.hpp"
#include "jordanian/rep_checks.hpp"
#include "jordanian/rtt_checks.hpp"

namespace jordanian {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

std::map<Symbol, Scalar> parse_bindings(const std::string& at) {
  std::map<Symbol, Scalar> out;
  if (trim(at).empty()) return out;
  std::stringstream in(at);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("malformed binding '" + trim(item) + "': expected name=value");
    const std::string name = trim(item.substr(0, eq));
    if (!is_identifier(name)) throw Error("malformed binding '" + trim(item) + "': bad name");
    const Symbol key(name);
    if (out.contains(key)) throw Error("duplicate binding for '" + name + "'");
    out.emplace(key, parse_scalar(item.substr(eq + 1)));
  }
  return out;
}

SuiteConfig make_config(const ConfigInput& input, const EngineOptions& engine) {
  const auto bindings = parse_bindings(input.at);
  auto colour_of = [&](const std::string& text, const char* fallback) {
    const Colour c = trim(text).empty() ? colour(fallback) : parse_scalar(text);
    return c.substitute(bindings);
  };
  SuiteConfig cfg;
  cfg.lambda = colour_of(input.lambda, "lambda");
  cfg.mu = colour_of(input.mu, "mu");
  cfg.nu = colour_of(input.nu, "nu");
  cfg.eta = colour_of(input.eta, "eta");
  cfg.p.h = cfg.p.h.substitute(bindings);
  cfg.p.s = cfg.p.s.substitute(bindings);
  cfg.engine = engine;
  return cfg;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"braid",           "char-eq", "classical", "determinant", "hopf",
                                              "quasitriangular", "rtt",     "unitarity", "ybe"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::binary_search(n.begin(), n.end(), name);
}

VerificationReport run_suite(const std::string& name, const SuiteConfig& c) {
  VerificationReport out;
  if (name == "all") {
    for (const auto& s : suite_names()) out.append(run_suite(s, c), s + ": ");
    return out;
  }
  if (name == "ybe") {
    out.append(verify_coloured_ybe(c.lambda, c.mu, c.nu, c.p));
    out.append(verify_specializations());
  } else if (name == "braid") {
    out.append(verify_braided_ybe(c.lambda, c.mu, c.nu, c.p));
  } else if (name == "char-eq") {
    out.append(verify_characteristic_equation(c.lambda, c.mu, c.p));
  } else if (name == "unitarity") {
    out.append(verify_coloured_unitarity(c.lambda, c.mu, c.p));
  } else if (name == "hopf") {
    out.append(check_defining_relations(c.eta, c.p));
    out.append(verify_hopf_axioms(c.lambda, c.mu, c.nu, c.eta, c.p));
    out.append(check_hopf_subalgebra(c.p));
  } else if (name == "quasitriangular") {
    out.add_residual("universal R in representation equals the coloured R-matrix",
                     universal_R_rep(c.lambda, c.mu, c.p) - coloured_R(c.lambda, c.mu, c.p).matrix);
    out.append(verify_quasitriangularity(c.lambda, c.mu, c.nu, c.p));
  } else if (name == "classical") {
    out.append(classical_structure(c.lambda, c.mu, c.nu, c.p));
  } else if (name == "rtt") {
    out.append(verify_rtt_span(c.lambda, c.mu, c.p, c.engine));
    out.append(verify_rtt_invariants(c.lambda, c.mu, c.p, c.engine));
  } else if (name == "determinant") {
    out.append(verify_determinant_forms(c.lambda, c.p, c.engine));
    out.append(verify_grouplike(c.lambda, c.p, c.engine));
    out.append(verify_antipode_inverse(c.lambda, c.p, c.engine));
    out.append(det_commutator_report(c.lambda, c.mu, c.p, c.engine, c.degree_four));
  } else {
    throw Error("unknown suite '" + name + "'");
  }
  return out;
}

// ------------------------------------------------------------------ emit

const std::vector<std::string>& emit_targets() {
  static const std::vector<std::string> names{"braid",          "determinant", "r-matrix",
                                              "relations",      "representation", "universal-r"};
  return names;
}

bool is_emit_target(const std::string& name) {
  const auto& n = emit_targets();
  return std::find(n.begin(), n.end(), name) != n.end();
}

namespace {

ScalarStyle style_of(OutputFormat f) { return f == OutputFormat::latex ? ScalarStyle::latex : ScalarStyle::plain; }

std::string emit_matrix(const ParamMatrix& m, OutputFormat format) {
  if (format == OutputFormat::json) return to_json(m).dump(2) + "\n";
  return format_matrix(m, style_of(format));
}

std::string emit_named(const std::vector<std::pair<std::string, std::string>>& items, OutputFormat format,
                       const std::vector<std::string>& json_names = {}, bool relations = false) {
  std::string out;
  if (format == OutputFormat::json) {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t i = 0; i < items.size(); ++i) {
      j.push_back({{"name", json_names.empty() ? items[i].first : json_names[i]}, {"element", items[i].second}});
    }
    return j.dump(2) + "\n";
  }
  for (const auto& [name, text] : items) {
    if (relations) {
      out += format == OutputFormat::latex ? name + "\\colon\\quad & " + text + " = 0 \\\\\n" : name + ": " + text + "\n";
    } else {
      out += format == OutputFormat::latex ? name + " &= " + text + " \\\\\n" : name + " = " + text + "\n";
    }
  }
  return out;
}

std::string latex_relation_name(const std::string& plain) {
  // "[a_lambda,c_mu]" -> "[a_{\lambda}, c_{\mu}]"
  const auto comma = plain.find(',');
  auto part = [](const std::string& s) {
    const auto us = s.find('_');
    const std::string colour = s.substr(us + 1);
    return s.substr(0, us) + "_{" + format_scalar(parse_scalar(colour), ScalarStyle::latex) + "}";
  };
  return "[" + part(plain.substr(1, comma - 1)) + ", " + part(plain.substr(comma + 1, plain.size() - comma - 2)) + "]";
}

}  // namespace

std::string emit(const std::string& target, const SuiteConfig& c, OutputFormat format) {
  const ScalarStyle style = style_of(format);
  if (target == "r-matrix") return emit_matrix(coloured_R(c.lambda, c.mu, c.p).matrix, format);
  if (target == "braid") return emit_matrix(braid_operator(c.lambda, c.mu, c.p).matrix, format);
  if (target == "universal-r") return emit_matrix(universal_R_rep(c.lambda, c.mu, c.p), format);
  if (target == "representation") {
    const auto rep = fundamental_rep(c.eta, c.p);
    if (format == OutputFormat::json) {
      nlohmann::json j = nlohmann::json::object();
      for (const auto& [g, m] : rep) j[generator_name(g)] = to_json(m);
      return j.dump(2) + "\n";
    }
    std::string out;
    for (const auto& [g, m] : rep) {
      out += generator_name(g) + " =\n" + format_matrix(m, style);
    }
    return out;
  }
  if (target == "relations") {
    const RelationSet rel = paper_relations(c.lambda, c.mu, c.p);
    std::vector<std::pair<std::string, std::string>> items;
    for (std::size_t i = 0; i < rel.size(); ++i) {
      const std::string name = format == OutputFormat::latex ? latex_relation_name(rel.names[i]) : rel.names[i];
      items.emplace_back(name, format_ncpoly(rel.elements[i], style));
    }
    if (format == OutputFormat::json) {
      nlohmann::json j = nlohmann::json::array();
      for (std::size_t i = 0; i < rel.size(); ++i) j.push_back({{"name", rel.names[i]}, {"element", items[i].second}});
      return j.dump(2) + "\n";
    }
    return emit_named(items, format, {}, true);
  }
  if (target == "determinant") {
    const std::string l = format_scalar(c.lambda, style);
    const std::string lname = format == OutputFormat::latex ? "D_{" + l + "}" : "D_" + l;
    return emit_named({{lname, format_ncpoly(quantum_determinant(c.lambda, DeterminantForm::first, c.p), style)},
                       {lname + "'", format_ncpoly(quantum_determinant(c.lambda, DeterminantForm::alternate, c.p), style)}},
                      format, {"first", "alternate"});
  }
  throw Error("unknown emit target '" + target + "'");
}

std::string format_report(const VerificationReport& report, OutputFormat format) {
  if (format == OutputFormat::json) return report.to_json().dump(2) + "\n";
  std::string out;
  if (format == OutputFormat::latex) {
    out += "\\begin{itemize}\n";
    for (const auto& c : report.checks()) {
      out += std::string("  \\item \\textbf{") + (c.pass ? "pass" : "fail") + "} \\verb|" + c.identity + "|\n";
    }
    return out + "\\end{itemize}\n";
  }
  for (const auto& c : report.checks()) {
    out += std::string(c.pass ? "PASS " : "FAIL ") + c.identity + "\n";
    if (c.detail.empty()) continue;
    std::string detail = c.detail;
    while (!detail.empty() && detail.back() == '\n') detail.pop_back();
    for (std::size_t at = detail.find('\n'); at != std::string::npos; at = detail.find('\n', at + 6)) {
      detail.replace(at, 1, "\n     ");
    }
    out += "     " + detail + "\n";
  }
  out += std::to_string(report.size() - report.failures()) + "/" + std::to_string(report.size()) + " identities pass\n";
  return out;
}

nlohmann::json summary_json(const SuiteConfig& c, const std::vector<std::string>& suites,
                            const std::vector<VerificationReport>& reports) {
  nlohmann::json parameters = {{"h", format_scalar(c.p.h)},       {"s", format_scalar(c.p.s)},
                               {"lambda", format_scalar(c.lambda)}, {"mu", format_scalar(c.mu)},
                               {"nu", format_scalar(c.nu)},         {"eta", format_scalar(c.eta)}};
  nlohmann::json list = nlohmann::json::array();
  bool pass = true;
  for (std::size_t i = 0; i < suites.size(); ++i) {
    const auto& r = reports[i];
    pass = pass && r.all_pass();
    list.push_back({{"suite", suites[i]},
                    {"status", r.all_pass() ? "pass" : "fail"},
                    {"identities", r.size()},
                    {"failures", r.failures()},
                    {"report", r.to_json()}});
  }
  return {{"parameters", parameters}, {"status", pass ? "pass" : "fail"}, {"suites", list}};
}

}  // namespace jordanian
