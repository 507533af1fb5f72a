#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hopfpartial/cli.hpp"
#include "hopfpartial/error.hpp"
#include "hopfpartial/parallel.hpp"
#include "hopfpartial/scenarios.hpp"

namespace py = pybind11;

namespace {

hp::ScenarioConfig parse_config(const std::string& config_json) {
  return hp::ScenarioConfig::from_json(hp::Json::parse(config_json));
}

}  // namespace

PYBIND11_MODULE(_hopfpartial, m) {
  m.doc() = "Exact verification of twisted partial Hopf actions";
  m.attr("__version__") = hp::kToolVersion;

  py::register_exception<hp::Error>(m, "HopfPartialError", PyExc_ValueError);

  m.def("scenario_names", &hp::scenario_names);
  m.def("mutation_targets", &hp::mutation_targets, py::arg("scenario"));
  m.def("default_config", [](const std::string& name) { return hp::ScenarioConfig::defaults(name).to_json().dump(); },
        py::arg("name"), "Default scenario config as a JSON string.");
  m.def(
      "run_scenario",
      [](const std::string& config_json, bool fail_fast, int jobs) {
        hp::ScenarioConfig cfg = parse_config(config_json);
        cfg.validate();
        hp::set_jobs(jobs);
        hp::RunOptions ro;
        ro.fail_fast = fail_fast;
        hp::ScenarioResult res;
        {
          py::gil_scoped_release release;
          res = hp::run_scenario(cfg, ro);
        }
        return hp::report_envelope(res).dump();
      },
      py::arg("config_json"), py::arg("fail_fast") = false, py::arg("jobs") = 0,
      "Runs a scenario and returns the report envelope as a JSON string.");
  m.def(
      "table",
      [](const std::string& config_json, const std::string& object) {
        return hp::scenario_table(parse_config(config_json), object).dump();
      },
      py::arg("config_json"), py::arg("object"));
  m.def("mutation_catalogue", [] {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (const auto& e : hp::mutation_catalogue()) out.emplace_back(e.scenario, e.mutation, e.expected);
    return out;
  });
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = hp::run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool in-process; returns (exit code, stdout, stderr).");
}
