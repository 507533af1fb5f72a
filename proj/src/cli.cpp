#include "hopfpartial/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hopfpartial/error.hpp"
#include "hopfpartial/parallel.hpp"

namespace hp {

namespace {

struct CommonOptions {
  std::string scenario;
  std::string config;
  std::string out;
  int jobs = 0;
  std::string mutate;
  int sample_count = -1;
  long long seed = -1;
  int verbosity = 1;
  bool fail_fast = false;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Config, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Config, path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Config, "cannot write " + path);
  f << text;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

ScenarioConfig resolve_config(const CommonOptions& o) {
  ScenarioConfig cfg;
  if (!o.config.empty()) {
    Json j = read_json(o.config);
    if (!o.scenario.empty() && j.contains("name") && j.at("name") != o.scenario) {
      throw Error(ErrorKind::Config, "config names scenario " + j.at("name").dump() + " but " + o.scenario + " was requested");
    }
    cfg = ScenarioConfig::from_json(j, o.scenario);
  } else {
    if (o.scenario.empty()) throw Error(ErrorKind::Config, "no scenario given");
    cfg = ScenarioConfig::defaults(o.scenario);
  }
  if (!o.mutate.empty()) cfg.mutation = Mutation::parse(o.mutate);
  if (o.sample_count >= 0) cfg.sample_count = o.sample_count;
  if (o.seed >= 0) cfg.seed = static_cast<std::uint64_t>(o.seed);
  cfg.validate();
  return cfg;
}

void apply_runtime(const CommonOptions& o) {
  set_jobs(o.jobs);
  set_verbosity(o.verbosity);
}

void summarize(const ScenarioResult& res, int verbosity, std::ostream& err) {
  if (verbosity < 1) return;
  std::size_t failed = 0, skipped = 0;
  for (const auto& c : res.report.checks()) {
    if (c.status == Status::Fail) {
      ++failed;
      err << "FAIL " << c.id;
      if (!c.witnesses.empty()) err << " at " << Json(c.witnesses[0].tuple).dump() << ": " << c.witnesses[0].detail;
      err << "\n";
    } else if (c.status == Status::Skipped) {
      ++skipped;
    }
  }
  if (verbosity >= 2) {
    for (const auto& t : res.timings) err << "stage " << t.stage << " " << std::fixed << std::setprecision(2) << t.seconds << " s\n";
  }
  err << res.config.name << ": " << res.report.checks().size() << " checks, " << failed << " failed, " << skipped
      << " skipped\n";
}

void add_common(CLI::App* cmd, CommonOptions& o, bool with_run_flags) {
  cmd->add_option("--config", o.config, "scenario config JSON");
  cmd->add_option("--out", o.out, "output path (stdout when omitted)");
  cmd->add_option("--jobs", o.jobs, "worker threads (default HOPF_PARTIAL_JOBS, then all cores)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--verbosity", o.verbosity, "0 quiet, 1 summary, 2 timings and more witnesses")->check(CLI::Range(0, 3));
  if (with_run_flags) {
    cmd->add_option("--mutate", o.mutate, "single-entry mutation target:op:index");
    cmd->add_option("--sample-count", o.sample_count, "associativity samples")->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", o.seed, "sampling seed")->check(CLI::NonNegativeNumber);
    cmd->add_flag("--fail-fast", o.fail_fast, "skip remaining stages after the first failing stage");
  }
}

int cmd_verify(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  ScenarioConfig cfg = resolve_config(o);
  apply_runtime(o);
  RunOptions ro;
  ro.fail_fast = o.fail_fast;
  ScenarioResult res = run_scenario(cfg, ro);
  std::string text = render(report_envelope(res));
  if (o.out.empty()) {
    out << text;
  } else {
    write_text(o.out, text);
  }
  summarize(res, o.verbosity, err);
  return res.report.passed() ? kExitPass : kExitFail;
}

int cmd_table(const CommonOptions& o, const std::string& object, std::ostream& out) {
  ScenarioConfig cfg = resolve_config(o);
  apply_runtime(o);
  std::string text = render(scenario_table(cfg, object));
  if (o.out.empty()) {
    out << text;
  } else {
    write_text(o.out, text);
  }
  return kExitPass;
}

void list_diff(const Json& golden, const Json& current, std::ostream& err) {
  Json patch = Json::diff(golden, current);
  std::size_t shown = 0;
  for (const auto& op : patch) {
    if (shown++ == 20) {
      err << "... " << patch.size() - 20 << " more differences\n";
      break;
    }
    err << op.at("op").get<std::string>() << " " << op.at("path").get<std::string>();
    if (op.contains("value")) {
      std::string v = op.at("value").dump();
      if (v.size() > 120) v = v.substr(0, 117) + "...";
      err << " = " << v;
    }
    err << "\n";
  }
}

int cmd_golden(const CommonOptions& o, const std::string& action, const std::string& dir, std::ostream& err) {
  ScenarioConfig cfg = resolve_config(o);
  std::string path = (std::filesystem::path(dir) / (cfg.name + ".json")).string();
  Json golden;
  if (action == "check") {
    if (!std::filesystem::exists(path)) {
      err << "no golden report at " << path << "\n";
      return kExitUsage;
    }
    golden = read_json(path);
  }
  apply_runtime(o);
  ScenarioResult res = run_scenario(cfg);
  Json current = report_envelope(res);
  if (action == "record") {
    write_text(path, render(current));
    if (o.verbosity >= 1) err << "recorded " << path << "\n";
    return res.report.passed() ? kExitPass : kExitFail;
  }
  if (golden == current) {
    if (o.verbosity >= 1) err << cfg.name << ": matches " << path << "\n";
    return kExitPass;
  }
  err << cfg.name << ": differs from " << path << "\n";
  list_diff(golden, current, err);
  return kExitFail;
}

}  // namespace

Json report_envelope(const ScenarioResult& res) {
  Json j;
  j["tool"] = "hopf-partial";
  j["version"] = kToolVersion;
  j["scenario"] = res.config.name;
  j["config"] = res.config.to_json();
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& c : res.report.checks()) {
    if (c.status == Status::Pass) ++passed;
    if (c.status == Status::Fail) ++failed;
    if (c.status == Status::Skipped) ++skipped;
  }
  j["status"] = failed == 0 ? "pass" : "fail";
  j["summary"] = {{"checks", res.report.checks().size()}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}};
  const CheckResult* first = res.report.first_failure();
  j["first_failure"] = first ? Json(first->id) : Json(nullptr);
  j["stages"] = res.stages;
  j["info"] = res.report.info();
  Json checks = Json::array();
  for (const auto& c : res.report.checks()) checks.push_back(c.to_json());
  j["checks"] = checks;
  return j;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of twisted partial Hopf actions", "hopf-partial"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  CommonOptions vo, to, go;
  auto* verify = app.add_subcommand("verify", "run a scenario's verification pipeline");
  verify->add_option("scenario", vo.scenario, "scenario name");
  add_common(verify, vo, true);

  std::string object;
  auto* table = app.add_subcommand("table", "dump a structure-constant table");
  table->add_option("scenario", to.scenario, "scenario name")->required();
  table->add_option("object", object, "crossed-product, hopf, action or omega")->required();
  add_common(table, to, false);

  std::string action;
  std::string dir = "tests/golden";
  auto* golden = app.add_subcommand("golden", "record or check golden reports");
  golden->add_option("action", action, "record or check")->required()->check(CLI::IsMember({"record", "check"}));
  golden->add_option("scenario", go.scenario, "scenario name");
  golden->add_option("--dir", dir, "golden report directory");
  add_common(golden, go, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(vo, out, err);
    if (*table) return cmd_table(to, object, out);
    return cmd_golden(go, action, dir, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Config || e.kind() == ErrorKind::Parse ? kExitUsage : kExitFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace hp
