// Acceptance driver: one [PASS]/[FAIL] line per criterion.
// usage: acceptance <path to hopf-partial>

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hopfpartial/builders.hpp"
#include "hopfpartial/cli.hpp"
#include "hopfpartial/constructors.hpp"
#include "hopfpartial/parallel.hpp"
#include "hopfpartial/scenarios.hpp"

using namespace hp;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
  Json report;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

class Driver {
 public:
  Driver(std::string tool, fs::path dir) : tool_(std::move(tool)), dir_(std::move(dir)) {}

  Run run(const std::vector<std::string>& args) {
    std::string tag = "run" + std::to_string(counter_++);
    fs::path out = dir_ / (tag + ".json"), err = dir_ / (tag + ".err");
    std::string cmd = quote(tool_);
    for (const auto& a : args) cmd += " " + quote(a);
    cmd += " --out " + quote(out.string()) + " 2> " + quote(err.string());
    int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    try {
      r.report = Json::parse(r.out);
    } catch (const std::exception&) {
      r.report = Json();
    }
    return r;
  }

 private:
  std::string tool_;
  fs::path dir_;
  int counter_ = 0;
};

// Accumulates reasons for a failed criterion.
struct Verdict {
  std::vector<std::string> problems;
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  bool ok() const { return problems.empty(); }
};

const Json* find_check(const Json& report, const std::string& id) {
  if (!report.contains("checks")) return nullptr;
  for (const auto& c : report.at("checks")) {
    if (c.at("id") == id) return &c;
  }
  return nullptr;
}

void require_pass(Verdict& v, const Json& report, const std::string& id, long long evaluated = -1) {
  const Json* c = find_check(report, id);
  if (!c) {
    v.require(false, id + " missing");
    return;
  }
  v.require(c->at("status") == "pass", id + " " + c->at("status").get<std::string>());
  if (evaluated >= 0) {
    long long got = c->at("evaluated").get<long long>();
    v.require(got == evaluated, id + " evaluated " + std::to_string(got) + ", expected " + std::to_string(evaluated));
  }
}

// Every check whose id starts with prefix passes; at least min_count of them exist.
void require_prefix(Verdict& v, const Json& report, const std::string& prefix, std::size_t min_count) {
  std::size_t seen = 0;
  if (report.contains("checks")) {
    for (const auto& c : report.at("checks")) {
      const std::string id = c.at("id").get<std::string>();
      if (id.rfind(prefix, 0) != 0) continue;
      ++seen;
      v.require(c.at("status") == "pass", id + " " + c.at("status").get<std::string>());
    }
  }
  v.require(seen >= min_count, prefix + "* has " + std::to_string(seen) + " checks, expected at least " +
                                   std::to_string(min_count));
}

double stage_seconds(const std::string& err, const std::string& stage) {
  std::istringstream in(err);
  std::string line;
  const std::string key = "stage " + stage + " ";
  while (std::getline(in, line)) {
    if (line.rfind(key, 0) == 0) return std::stod(line.substr(key.size()));
  }
  return -1;
}

void print(int n, const std::string& title, const Verdict& v) {
  std::cout << (v.ok() ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << title;
  if (!v.ok()) {
    std::cout << " (";
    for (std::size_t i = 0; i < v.problems.size() && i < 5; ++i) std::cout << (i ? "; " : "") << v.problems[i];
    if (v.problems.size() > 5) std::cout << "; +" << v.problems.size() - 5 << " more";
    std::cout << ")";
  }
  std::cout << std::endl;
}

Verdict hopf_validity() {
  Verdict v;
  auto start = std::chrono::steady_clock::now();
  set_jobs(1);
  std::vector<std::pair<std::string, HopfAlgebraData>> algebras;
  for (const std::string g : {"trivial", "z2", "z3", "z4", "z5", "z6", "z7", "z8", "klein4", "s3", "q8"}) {
    auto grp = std::make_shared<const FiniteGroup>(FiniteGroup::preset(g));
    HopfAlgebraData kg = group_algebra(grp);
    algebras.emplace_back("k" + g + "*", dual_hopf(kg));
    algebras.emplace_back("k" + g, std::move(kg));
  }
  algebras.emplace_back("torus(2,4)", truncated_torus(2, 4));
  auto klein = std::make_shared<const FiniteGroup>(FiniteGroup::preset("klein4"));
  PairingObjects p = build_pairing_objects(klein, 2, {}, {0, 1, 2}, GroupCocycleTable::klein_four(klein));
  v.require(p.h1->dim() == 64 && p.h2->dim() == 64, "smash and cosemidirect products must have dimension 64");
  for (const auto& [name, h] : algebras) {
    Report r = validate_hopf(h);
    v.require(r.passed() && r.failure_count() == 0, name + " fails validate_hopf");
  }
  v.require(validate_hopf(*p.h1).passed(), "smash product fails validate_hopf");
  v.require(validate_hopf(*p.h2).passed(), "cosemidirect product fails validate_hopf");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(secs < 60, "took " + std::to_string(secs) + " s");
  return v;
}

Verdict klein_cocycle_facts() {
  Verdict v;
  auto g = std::make_shared<const FiniteGroup>(FiniteGroup::preset("klein4"));
  GroupCocycleTable t = GroupCocycleTable::klein_four(g);
  const int a = 1, b = 2, ab = 3;
  const std::vector<std::tuple<int, int, int>> expected = {
      {a, a, -1}, {a, ab, -1}, {b, a, -1}, {b, b, -1}, {ab, b, -1}, {ab, ab, -1}, {a, b, 1}, {b, ab, 1}, {ab, a, 1}};
  for (const auto& [x, y, val] : expected) {
    v.require(t(x, y) == Scalar(val), "gamma(" + g->label(x) + "," + g->label(y) + ") = " + t(x, y).to_string());
  }
  for (int x = 0; x < 4; ++x) v.require(t(x, 0) == Scalar(1) && t(0, x) == Scalar(1), "not normalized");
  CheckResult law = t.check_cocycle_law();
  v.require(law.passed() && law.evaluated == 64, "cocycle law on 64 triples");
  v.require(!t.is_coboundary(), "cocycle is a coboundary");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path to hopf-partial>\n";
    return 2;
  }
  fs::path dir = fs::temp_directory_path() / ("hopfpartial_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  Driver d(argv[1], dir);
  std::vector<bool> results;
  auto record = [&](int n, const std::string& title, const Verdict& v) {
    print(n, title, v);
    results.push_back(v.ok());
  };

  record(1, "constructor outputs pass validate_hopf in under 60 s", hopf_validity());

  Run k1 = d.run({"verify", "klein4", "--jobs", "1", "--verbosity", "2"});
  Run k4 = d.run({"verify", "klein4", "--jobs", "4", "--verbosity", "2"});
  Run k8 = d.run({"verify", "klein4", "--jobs", "8", "--verbosity", "2"});
  Run smoke = d.run({"verify", "smoke_z2", "--verbosity", "0"});
  Run induced = d.run({"verify", "induced_functions", "--verbosity", "0"});
  const Json& kr = k1.report;

  {
    Verdict v;
    v.require(k1.code == kExitPass, "klein4 exit " + std::to_string(k1.code));
    require_pass(v, kr, "partial.unit_action", 48);
    require_pass(v, kr, "partial.multiplicative", 64LL * 48 * 48);
    require_pass(v, kr, "twisted.twisting", 64LL * 64 * 48);
    require_pass(v, kr, "twisted.absorption", 64LL * 64);
    require_pass(v, kr, "twisted.left_absorption", 64LL * 64);
    require_pass(v, kr, "twisted.unit_absorption", 64LL * 64);
    require_pass(v, kr, "partial.unit_idempotent", 64);
    double one = stage_seconds(k1.err, "partial"), four = stage_seconds(k4.err, "partial");
    v.require(one >= 0 && one < 600, "partial stage took " + std::to_string(one) + " s with one job");
    v.require(four >= 0 && four < 180, "partial stage took " + std::to_string(four) + " s with four jobs");
    record(2, "twisted partial action axioms hold exhaustively on klein4", v);
  }
  {
    Verdict v;
    require_pass(v, kr, "cocycle.normalization", 64);
    require_pass(v, kr, "cocycle.cocycle_law", 64LL * 64 * 64);
    record(3, "normalization and cocycle law hold exhaustively on klein4", v);
  }
  {
    Verdict v;
    for (const Json* r : std::vector<const Json*>{&kr, &induced.report}) {
      require_prefix(v, *r, "symmetric.", 19);
      for (const char* id : {"symmetric.f1_central", "symmetric.f2_central", "symmetric.inverse_exists",
                             "symmetric.inverse_absorption", "symmetric.inverse_identity", "symmetric.conjugation",
                             "symmetric.inverse_twisting", "symmetric.action_on_cocycle", "symmetric.action_on_inverse"}) {
        require_pass(v, *r, id);
      }
    }
    v.require(induced.code == kExitPass, "induced_functions exit " + std::to_string(induced.code));
    record(4, "symmetry suite passes on klein4 and induced_functions", v);
  }
  {
    Verdict v;
    require_pass(v, kr, "crossed.projector_idempotent");
    require_pass(v, kr, "associativity.criterion_twisting");
    require_pass(v, kr, "associativity.criterion_cocycle");
    require_pass(v, kr, "associativity.sampled", 10000);
    long long dim = smoke.report.contains("info") ? smoke.report.at("info").at("dim_crossed_product").get<long long>() : 0;
    v.require(dim > 0, "smoke_z2 crossed product dimension missing");
    require_pass(v, smoke.report, "crossed.projector_idempotent");
    require_pass(v, smoke.report, "associativity.exhaustive", dim * dim * dim);
    record(5, "crossed product is associative (criterion, samples, exhaustive smoke)", v);
  }
  {
    Verdict v;
    for (const Json* r : std::vector<const Json*>{&kr, &smoke.report}) {
      require_prefix(v, *r, "cleft.", 17);
      require_prefix(v, *r, "reconstruct.", 7);
      require_prefix(v, *r, "reconstructed.", 20);
      require_prefix(v, *r, "cleft_iso.", 5);
      require_pass(v, *r, "reconstruct.identification");
      require_pass(v, *r, "reconstruct.action");
      require_pass(v, *r, "reconstruct.cocycle");
    }
    record(6, "cleft round trip reconstructs the action on klein4 and smoke_z2", v);
  }
  {
    Verdict v;
    require_prefix(v, kr, "gauge_identity.", 7);
    require_pass(v, kr, "gauge.coboundary_oracle");
    require_prefix(v, kr, "gauge.", 9);
    for (const char* id : {"gauge.convolution_unit", "gauge.absorbs_unit", "gauge.action", "gauge.cocycle"}) {
      require_pass(v, kr, id);
    }
    require_prefix(v, kr, "gauge_target.", 20);
    require_prefix(v, kr, "gauge_iso.", 6);
    require_pass(v, kr, "gauge.extract");
    require_prefix(v, kr, "gauge_extracted.", 6);
    require_pass(v, kr, "gauge.extract_round_trip");
    record(7, "identity and character gauges verify; extraction round-trips on klein4", v);
  }
  {
    Verdict v = klein_cocycle_facts();
    require_pass(v, kr, "group_cocycle.law", 64);
    require_pass(v, kr, "group_cocycle.coboundary_class");
    record(8, "Klein four cocycle values, law and non-coboundary", v);
  }
  {
    Verdict v;
    const auto& cat = mutation_catalogue();
    v.require(cat.size() == 12, "catalogue has " + std::to_string(cat.size()) + " entries");
    for (const auto& e : cat) {
      Run r = d.run({"verify", e.scenario, "--mutate", e.mutation, "--fail-fast", "--verbosity", "0"});
      std::string label = e.scenario + " " + e.mutation;
      v.require(r.code == kExitFail, label + " exit " + std::to_string(r.code));
      std::string first = r.report.contains("first_failure") && r.report.at("first_failure").is_string()
                              ? r.report.at("first_failure").get<std::string>()
                              : std::string("none");
      v.require(first == e.expected, label + " first failure " + first + ", expected " + e.expected);
    }
    record(9, "each catalogued mutation fails the expected check and exits 1", v);
  }
  {
    Verdict v;
    v.require(k1.code == kExitPass && k8.code == kExitPass, "klein4 runs did not pass");
    v.require(k1.out == k4.out, "reports with --jobs 1 and --jobs 4 differ");
    v.require(!k1.out.empty() && k1.out == k8.out, "reports with --jobs 1 and --jobs 8 differ");
    record(10, "klein4 reports are byte-identical for --jobs 1 and --jobs 8", v);
  }

  fs::remove_all(dir);
  for (bool ok : results) {
    if (!ok) return 1;
  }
  return 0;
}
