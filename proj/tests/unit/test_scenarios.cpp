#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "hopfpartial/cli.hpp"
#include "hopfpartial/error.hpp"
#include "hopfpartial/parallel.hpp"
#include "hopfpartial/scenarios.hpp"

using namespace hp;

namespace {

std::string first_fail(const Report& r) {
  const CheckResult* f = r.first_failure();
  return f ? f->id : std::string();
}

ScenarioResult run(const std::string& name, const std::string& mutation = {}, bool fail_fast = true) {
  ScenarioConfig cfg = ScenarioConfig::defaults(name);
  if (!mutation.empty()) cfg.mutation = Mutation::parse(mutation);
  RunOptions ro;
  ro.fail_fast = fail_fast;
  return run_scenario(cfg, ro);
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool throws_config(const Json& j) {
  try {
    ScenarioConfig::from_json(j).validate();
  } catch (const Error& e) {
    return e.kind() == ErrorKind::Config;
  }
  return false;
}

}  // namespace

TEST_CASE("small scenarios pass with unique check ids") {
  for (const std::string name : {"smoke_z2", "induced_functions", "group_dictionary"}) {
    ScenarioResult res = run(name, {}, false);
    INFO(name << " " << first_fail(res.report));
    CHECK(res.report.passed());
    CHECK(res.report.checks().size() > 40);
    std::set<std::string> ids;
    for (const auto& c : res.report.checks()) {
      CHECK(c.status == Status::Pass);
      ids.insert(c.id);
    }
    CHECK(ids.size() == res.report.checks().size());
  }
}

TEST_CASE("scenario stage lists") {
  CHECK(run("smoke_z2").stages ==
        std::vector<std::string>{"hopf", "group_cocycle", "partial", "symmetric", "crossed", "cleft", "gauge"});
  CHECK(run("induced_functions").stages ==
        std::vector<std::string>{"global", "induced", "symmetric", "crossed", "cleft", "gauge"});
  CHECK(run("group_dictionary").stages ==
        std::vector<std::string>{"dictionary", "symmetric", "crossed", "cleft", "gauge"});
}

TEST_CASE("smoke exhaustive associativity covers every triple") {
  ScenarioResult res = run("smoke_z2");
  const CheckResult* c = res.report.find("associativity.exhaustive");
  REQUIRE(c != nullptr);
  long long d = res.report.info().at("dim_crossed_product").get<long long>();
  CHECK(c->evaluated == static_cast<std::uint64_t>(d * d * d));
}

TEST_CASE("mutation parse") {
  Mutation m = Mutation::parse("omega:negate:65");
  CHECK(m.target == "omega");
  CHECK(m.op == "negate");
  CHECK(m.index == 65);
  CHECK(m.to_string() == "omega:negate:65");
  for (const std::string bad : {"omega", "omega:negate", "omega:flip:1", "omega:negate:-1", "omega:negate:x", ""}) {
    INFO(bad);
    CHECK_THROWS_AS(Mutation::parse(bad), Error);
  }
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(ScenarioConfig::defaults("nope"), Error);
  CHECK(throws_config({{"name", "smoke_z2"}, {"bogus", 1}}));
  CHECK(throws_config({{"name", "smoke_z2"}, {"group", "nope"}}));
  CHECK(throws_config({{"name", "smoke_z2"}, {"n", 3}}));
  CHECK(throws_config({{"name", "klein4"}, {"m", 3}}));
  CHECK(throws_config({{"name", "smoke_z2"}, {"subset", Json::array()}}));
  CHECK(throws_config({{"name", "klein4"}, {"subset", {"a", "a"}}}));
  CHECK(throws_config({{"name", "smoke_z2"}, {"character", {1, 0}}}));
  CHECK(throws_config({{"name", "smoke_z2"}, {"associativity", "sometimes"}}));
  CHECK(throws_config({{"name", "group_dictionary"}, {"group", "z3"}}));
  CHECK(throws_config({{"name", "smoke_z2"}, {"mutate", "w:negate:0"}}));
  CHECK_FALSE(throws_config({{"name", "smoke_z2"}, {"seed", 7}}));
}

TEST_CASE("config json round trip") {
  for (const auto& name : scenario_names()) {
    ScenarioConfig cfg = ScenarioConfig::defaults(name);
    cfg.mutation = Mutation::parse(mutation_targets(name)[0] + ":zero:1");
    Json j = cfg.to_json();
    CHECK(ScenarioConfig::from_json(j).to_json() == j);
  }
}

TEST_CASE("small scenario mutations hit the expected first failure") {
  const std::vector<std::tuple<std::string, std::string, std::string>> cases = {
      {"smoke_z2", "omega:negate:0", "cocycle.normalization"},
      {"smoke_z2", "action:negate:0", "partial.unit_action"},
      {"smoke_z2", "cocycle:negate:0", "group_cocycle.normalized"},
      {"smoke_z2", "antipode:negate:0", "h1.hopf.antipode"},
      {"smoke_z2", "pairing:negate:0", "pairing.product"},
      {"smoke_z2", "gamma:scale:2", "cleft.reconstruction"},
      {"smoke_z2", "v:scale:2", "gauge.convolution_unit"},
      {"group_dictionary", "u:negate:1", "gauge.convolution_unit"},
      {"group_dictionary", "gamma:scale:1", "cleft.reconstruction"},
      {"induced_functions", "u:negate:5", "global.cocycle_law"},
  };
  for (const auto& [scenario, mutation, expected] : cases) {
    ScenarioResult res = run(scenario, mutation);
    INFO(scenario << " " << mutation);
    CHECK(first_fail(res.report) == expected);
  }
}

TEST_CASE("catalogue entries name known targets") {
  CHECK(mutation_catalogue().size() == 12);
  for (const auto& e : mutation_catalogue()) {
    Mutation m = Mutation::parse(e.mutation);
    const auto& t = mutation_targets(e.scenario);
    CHECK(std::find(t.begin(), t.end(), m.target) != t.end());
  }
}

TEST_CASE("fail fast skips later stages") {
  ScenarioResult res = run("smoke_z2", "antipode:negate:0");
  const CheckResult* s = res.report.find("gauge.stage");
  REQUIRE(s != nullptr);
  CHECK(s->status == Status::Skipped);
  ScenarioResult full = run("smoke_z2", "antipode:negate:0", false);
  CHECK(full.report.checks().size() > res.report.checks().size());
}

TEST_CASE("reports do not depend on the thread count") {
  int saved = jobs();
  set_jobs(1);
  Json one = report_envelope(run("smoke_z2", {}, false));
  set_jobs(4);
  Json four = report_envelope(run("smoke_z2", {}, false));
  set_jobs(saved);
  CHECK(one.dump() == four.dump());
}

TEST_CASE("tables") {
  ScenarioConfig cfg = ScenarioConfig::defaults("smoke_z2");
  for (const std::string obj : {"hopf", "action", "omega", "crossed-product"}) {
    Json t = scenario_table(cfg, obj);
    CHECK_FALSE(t.empty());
  }
  CHECK_THROWS_AS(scenario_table(cfg, "nope"), Error);
}

TEST_CASE("cli exit codes") {
  CliRun ok = cli({"verify", "smoke_z2", "--verbosity", "0"});
  CHECK(ok.code == kExitPass);
  Json j = Json::parse(ok.out);
  CHECK(j.at("status") == "pass");
  CHECK(j.at("first_failure").is_null());

  CliRun bad = cli({"verify", "smoke_z2", "--mutate", "omega:negate:0", "--fail-fast"});
  CHECK(bad.code == kExitFail);
  CHECK(Json::parse(bad.out).at("first_failure") == "cocycle.normalization");
  CHECK(bad.err.find("FAIL cocycle.normalization") != std::string::npos);

  CHECK(cli({"verify", "nope"}).code == kExitUsage);
  CHECK(cli({"verify", "smoke_z2", "--mutate", "bogus:negate:0"}).code == kExitUsage);
  CHECK(cli({"verify", "smoke_z2", "--no-such-flag"}).code == kExitUsage);
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"table", "smoke_z2", "nope"}).code == kExitUsage);
  CHECK(cli({"table", "smoke_z2", "omega"}).code == kExitPass);
  CHECK(cli({"--version"}).code == kExitPass);
}

TEST_CASE("cli config file and out path") {
  auto dir = std::filesystem::temp_directory_path() / "hopfpartial_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::string cfg_path = (dir / "cfg.json").string();
  std::ofstream(cfg_path) << R"({"name": "smoke_z2", "associativity": "sampled", "sample_count": 50})";
  std::string out_path = (dir / "r.json").string();
  CHECK(cli({"verify", "--config", cfg_path, "--out", out_path, "--verbosity", "0"}).code == kExitPass);
  std::ifstream in(out_path);
  Json j = Json::parse(in);
  CHECK(j.at("config").at("sample_count") == 50);
  CHECK(cli({"verify", "klein4", "--config", cfg_path}).code == kExitUsage);
  std::filesystem::remove_all(dir);
}

TEST_CASE("golden record and check") {
  auto dir = std::filesystem::temp_directory_path() / "hopfpartial_golden_test";
  std::filesystem::remove_all(dir);
  std::string d = dir.string();
  CHECK(cli({"golden", "check", "smoke_z2", "--dir", d}).code == kExitUsage);
  CHECK(cli({"golden", "record", "smoke_z2", "--dir", d, "--verbosity", "0"}).code == kExitPass);
  CHECK(cli({"golden", "check", "smoke_z2", "--dir", d, "--verbosity", "0"}).code == kExitPass);

  std::string path = (dir / "smoke_z2.json").string();
  Json j;
  {
    std::ifstream in(path);
    j = Json::parse(in);
  }
  j["checks"][0]["evaluated"] = 12345;
  std::ofstream(path) << j.dump(2) << "\n";
  CliRun diff = cli({"golden", "check", "smoke_z2", "--dir", d});
  CHECK(diff.code == kExitFail);
  CHECK(diff.err.find("/checks/0/evaluated") != std::string::npos);
  std::filesystem::remove_all(dir);
}
