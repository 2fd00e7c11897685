#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jordanian/coloured_r.hpp"
#include "jordanian/error.hpp"
#include "jordanian/suites.hpp"

namespace py = pybind11;
using namespace jordanian;

namespace {

SuiteConfig config(const std::string& lambda, const std::string& mu, const std::string& nu, const std::string& eta,
                   const std::string& at, std::size_t max_sector_dim) {
  EngineOptions engine;
  if (max_sector_dim > 0) engine.max_sector_dim = max_sector_dim;
  return make_config({lambda, mu, nu, eta, at}, engine);
}

OutputFormat output_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "latex") return OutputFormat::latex;
  if (name == "plain") return OutputFormat::plain;
  throw Error("unknown format '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_jordanian, m) {
  m.doc() = "Coloured Jordanian R-matrix and RTT checks";
  py::register_exception<Error>(m, "JordanianError", PyExc_ValueError);

  m.def("suite_names", &suite_names);
  m.def("emit_targets", &emit_targets);

  m.def(
      "run_suite_json",
      [](const std::string& name, const std::string& lambda, const std::string& mu, const std::string& nu,
         const std::string& eta, const std::string& at, std::size_t max_sector_dim) {
        return run_suite(name, config(lambda, mu, nu, eta, at, max_sector_dim)).to_json().dump();
      },
      py::arg("name"), py::arg("lambda_") = "", py::arg("mu") = "", py::arg("nu") = "", py::arg("eta") = "",
      py::arg("at") = "", py::arg("max_sector_dim") = 0);

  m.def(
      "emit",
      [](const std::string& target, const std::string& format, const std::string& lambda, const std::string& mu,
         const std::string& at) {
        return emit(target, config(lambda, mu, "", "", at, 0), output_format(format));
      },
      py::arg("target"), py::arg("format") = "json", py::arg("lambda_") = "", py::arg("mu") = "",
      py::arg("at") = "");

  m.def(
      "coloured_r",
      [](const std::string& lambda, const std::string& mu, const std::string& at) {
        const SuiteConfig cfg = config(lambda, mu, "", "", at, 0);
        const ParamMatrix r = coloured_R(cfg.lambda, cfg.mu, cfg.p).matrix;
        std::vector<std::vector<std::string>> rows(r.rows());
        for (std::size_t i = 0; i < r.rows(); ++i) {
          for (std::size_t j = 0; j < r.cols(); ++j) rows[i].push_back(format_scalar(r(i, j)));
        }
        return rows;
      },
      py::arg("lambda_") = "", py::arg("mu") = "", py::arg("at") = "");

  m.def(
      "simplify", [](const std::string& text) { return format_scalar(parse_scalar(text)); }, py::arg("text"));
}
