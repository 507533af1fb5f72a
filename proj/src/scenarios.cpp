#include "hopfpartial/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "hopfpartial/builders.hpp"
#include "hopfpartial/cleft.hpp"
#include "hopfpartial/error.hpp"
#include "hopfpartial/gauge.hpp"
#include "hopfpartial/serialize.hpp"

namespace hp {

// ---------------------------------------------------------------- Mutation

Mutation Mutation::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 3) throw Error(ErrorKind::Config, "mutation must read target:op:index, got '" + text + "'");
  static const std::vector<std::string> ops = {"negate", "scale", "zero", "unit"};
  if (std::find(ops.begin(), ops.end(), parts[1]) == ops.end()) {
    throw Error(ErrorKind::Config, "unknown mutation op '" + parts[1] + "'");
  }
  Mutation m{parts[0], parts[1], 0};
  try {
    std::size_t used = 0;
    m.index = std::stoi(parts[2], &used);
    if (used != parts[2].size() || m.index < 0) throw std::invalid_argument("index");
  } catch (const std::exception&) {
    throw Error(ErrorKind::Config, "mutation index must be a non-negative integer, got '" + parts[2] + "'");
  }
  return m;
}

std::string Mutation::to_string() const { return target + ":" + op + ":" + std::to_string(index); }

namespace {

SparseVec mutate_vec(const Mutation& m, const SparseVec& v, const SparseVec& unit) {
  if (m.op == "negate") return v.scaled(Scalar(-1));
  if (m.op == "scale") return v.scaled(Scalar(2));
  if (m.op == "zero") return SparseVec();
  return unit;
}

Scalar mutate_scalar(const Mutation& m, const Scalar& s) {
  if (m.op == "negate") return -s;
  if (m.op == "scale") return s * Scalar(2);
  if (m.op == "zero") return Scalar();
  return Scalar(1);
}

void check_index(const Mutation& m, int size) {
  if (m.index >= size) {
    throw Error(ErrorKind::Config, "mutation index " + std::to_string(m.index) + " out of range for " + m.target +
                                       " (size " + std::to_string(size) + ")");
  }
}

void mutate_column(const Mutation& m, LinMap& map, const SparseVec& unit) {
  check_index(m, map.source_size());
  map.column(m.index) = mutate_vec(m, map.at(m.index), unit);
}

bool targets(const std::optional<Mutation>& m, const std::string& t) { return m && m->target == t; }

// ---------------------------------------------------------------- config helpers

GroupPtr make_group(const std::string& name) { return std::make_shared<const FiniteGroup>(FiniteGroup::preset(name)); }

std::vector<int> subset_indices(const FiniteGroup& g, const std::vector<std::string>& labels) {
  std::vector<int> out;
  for (const auto& l : labels) out.push_back(g.index_of(l));
  std::sort(out.begin(), out.end());
  return out;
}

GroupCocycleTable make_cocycle(const ScenarioConfig& cfg, GroupPtr g) {
  if (cfg.cocycle == "trivial") return GroupCocycleTable::trivial(g);
  if (cfg.cocycle == "klein_four") return GroupCocycleTable::klein_four(g);
  return GroupCocycleTable::from_json(g, cfg.cocycle_table);
}

std::vector<Scalar> character_values(const ScenarioConfig& cfg) {
  std::vector<Scalar> out;
  for (int k : cfg.character) out.push_back(Scalar::root_of_unity(cfg.m, k));
  return out;
}

bool uses_pairing(const std::string& name) { return name == "klein4" || name == "smoke_z2"; }

// ---------------------------------------------------------------- pipeline

class Pipeline {
 public:
  Pipeline(ScenarioResult& res, const RunOptions& opt) : res_(res), opt_(opt) {}

  void stage(const std::string& name, const std::function<void(Report&)>& fn) {
    res_.stages.push_back(name);
    if (!skip_reason_.empty()) {
      res_.report.add(skipped_check(name + ".stage", "stage " + name, skip_reason_));
      return;
    }
    auto start = std::chrono::steady_clock::now();
    Report r;
    try {
      fn(r);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Config) throw;
      r.add(make_check(name + ".build", "stage " + name + " builds its objects", false,
                       e.what()));
      skip_reason_ = "stage " + name + " did not build";
    }
    res_.timings.push_back({name, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()});
    res_.report.append(r);
    if (skip_reason_.empty() && opt_.fail_fast && !r.passed()) skip_reason_ = "fail-fast after stage " + name;
  }

 private:
  ScenarioResult& res_;
  const RunOptions& opt_;
  std::string skip_reason_;
};

LinMap unit_map(const TwistedPartialAction& t) {
  std::vector<SparseVec> cols;
  for (int h = 0; h < t.dim_h(); ++h) cols.push_back(t.unit_image(h));
  return LinMap({t.dim_h()}, ExactMatrix::from_columns(t.dim_a(), std::move(cols)));
}

TpaPtr with_maps(const TwistedPartialAction& t, HopfPtr hopf, LinMap action, LinMap omega) {
  return std::make_shared<const TwistedPartialAction>(std::move(hopf), t.carrier_ptr(), std::move(action), std::move(omega));
}

// Applies omega/action mutations to a built action.
TpaPtr mutate_action(const ScenarioConfig& cfg, TpaPtr t) {
  if (!targets(cfg.mutation, "omega") && !targets(cfg.mutation, "action")) return t;
  LinMap action = t->action();
  LinMap omega = t->cocycle();
  if (cfg.mutation->target == "omega") mutate_column(*cfg.mutation, omega, t->carrier().unit());
  if (cfg.mutation->target == "action") mutate_column(*cfg.mutation, action, t->carrier().unit());
  return with_maps(*t, t->hopf_ptr(), std::move(action), std::move(omega));
}

// Σ f(h1)(h2·1)
LinMap absorbed(const TwistedPartialAction& t, const LinMap& f) {
  const auto& H = t.hopf();
  LinMap out({t.dim_h()}, t.dim_a());
  for (int h = 0; h < t.dim_h(); ++h) {
    Accumulator acc;
    for (const auto& d : H.coalgebra().delta(h)) acc.add(t.carrier().multiply(f.at(d.left), t.unit_image(d.right)), d.coef);
    out.column(h) = acc.take();
  }
  return out;
}

struct Shared {
  TpaPtr tpa;  // symmetric once the symmetric stage ran
  CocycleClassification classification;
  CrossedPtr cp;
};

void partial_stage(Report& r, Shared& s, CocycleKind expected) {
  r.append(verify_twisted_partial(*s.tpa));
  s.classification = classify_cocycle(*s.tpa, expected);
  r.append(s.classification.report);
  r.info()["cocycle_kind"] = cocycle_kind_name(s.classification.kind);
}

void symmetric_stage(Report& r, Shared& s) {
  SymmetryResult sym = verify_symmetric(s.tpa, &s.classification.report);
  r.append(sym.report);
  s.tpa = sym.tpa;
}

void crossed_stage(Report& r, Shared& s, const ScenarioConfig& cfg) {
  s.cp = build_crossed_product(s.tpa);
  const auto& cp = *s.cp;
  r.append(verify_crossed_product(cp));
  AssociativityOptions opt;
  opt.mode = cfg.associativity == "exhaustive" ? AssociativityMode::Exhaustive : AssociativityMode::Sampled;
  opt.samples = cfg.sample_count;
  opt.seed = cfg.seed;
  r.append(verify_associativity(cp, opt));
  ComoduleAlgebra ca = comodule_structure(cp);
  r.append(verify_comodule_algebra(ca));
  Subspace co = coinvariants(ca);
  r.add(make_check("comodule.coinvariant_dimension", "dim (A#H)^coH = dim A", co.dim() == cp.tpa().dim_a(),
                   "coinvariants have dimension " + std::to_string(co.dim())));
  r.add(check_subalgebra("comodule.coinvariant_subalgebra", *cp.algebra(), co));
}

// γ(g)e_r = e_{gr}γ(g), γ'(g)ẽ_s = ẽ_{sg}γ'(g), γ(gs)ẽ_s = e_gγ(gs) on group-like basis elements.
CheckResult grouplike_exchange(const CleftData& cd) {
  const auto& H = *cd.extension.hopf;
  const auto& B = *cd.extension.carrier;
  auto conv = [&](const LinMap& f, const LinMap& g) {
    return convolution(ConvolutionElement{H.coalgebra_ptr(), cd.extension.carrier, f},
                       ConvolutionElement{H.coalgebra_ptr(), cd.extension.carrier, g})
        .map;
  };
  LinMap e = conv(cd.gamma, cd.gamma_prime);
  LinMap et = conv(cd.gamma_prime, cd.gamma);
  auto prod = [&](int g, int s) {
    const SparseVec v = H.algebra().product(g, s);
    return v.nnz() == 1 ? v.begin()->index : -1;
  };
  int nh = H.dim();
  return check_all("cleft.grouplike_exchange", "partial-representation identities on group-like elements", {nh, nh},
                   [&](const int* x) -> std::optional<std::string> {
                     int g = x[0], s = x[1];
                     int gs = prod(g, s), sg = prod(s, g);
                     if (gs < 0 || sg < 0) return "product of group-likes is not a basis element";
                     if (B.multiply(cd.gamma.at(g), e.at(s)) != B.multiply(e.at(gs), cd.gamma.at(g))) return "γ(g)e_s ≠ e_{gs}γ(g)";
                     if (B.multiply(cd.gamma_prime.at(g), et.at(s)) != B.multiply(et.at(sg), cd.gamma_prime.at(g))) {
                       return "γ'(g)ẽ_s ≠ ẽ_{sg}γ'(g)";
                     }
                     if (B.multiply(cd.gamma.at(gs), et.at(s)) != B.multiply(e.at(g), cd.gamma.at(gs))) return "γ(gs)ẽ_s ≠ e_gγ(gs)";
                     return std::nullopt;
                   });
}

void cleft_stage(Report& r, Shared& s, const ScenarioConfig& cfg) {
  const auto& cp = *s.cp;
  CleftData cd = build_cleft_maps(cp);
  if (targets(cfg.mutation, "gamma")) mutate_column(*cfg.mutation, cd.gamma, cp.algebra()->unit());
  if (targets(cfg.mutation, "gamma_prime")) mutate_column(*cfg.mutation, cd.gamma_prime, cp.algebra()->unit());
  r.append(verify_partially_cleft(cd));
  r.append(verify_cleft_construction(cd, cp));
  if (cd.extension.hopf->grouplike_basis()) r.add(grouplike_exchange(cd));
  CleftData normalized = normalize_gamma_prime(cd);
  r.append(verify_gamma_normalization(cd, normalized));
  Report again = verify_partially_cleft(normalized);
  const CheckResult* f = again.first_failure();
  r.add(make_check("normalize.still_cleft", "(γ, γ'*γ*γ') satisfies every cleft clause", again.passed(), f ? f->id : ""));

  const std::vector<std::pair<std::string, std::string>> later = {
      {"reconstruct.identification", "a ↦ a#1 is an algebra isomorphism A → B^{coH}"},
      {"reconstructed.stage", "reconstructed action verification"},
      {"cleft_iso.stage", "Φ/Ψ isomorphism"},
  };
  TpaPtr rebuilt;
  try {
    rebuilt = reconstruct_action(cd);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ImageNotInCoinvariants) throw;
    r.add(make_check("reconstruct.in_coinvariants", "reconstructed maps land in B^{coH}", false, e.what()));
    r.skip(later, "reconstruction left the coinvariants");
    return;
  }
  r.add(make_check("reconstruct.in_coinvariants", "reconstructed maps land in B^{coH}", true));
  r.append(compare_reconstruction(cp, cd, *rebuilt));
  r.append(verify_twisted_partial(*rebuilt), "reconstructed.");
  SymmetryResult sym = verify_symmetric(rebuilt);
  r.append(sym.report, "reconstructed.");
  auto rcp = build_crossed_product(rebuilt);
  r.append(cleft_isomorphism(cd, *rcp));
}

void gauge_stage(Report& r, Shared& s, const ScenarioConfig& cfg) {
  const auto& src = *s.cp;
  TpaPtr t = s.tpa;
  GaugePair id{t, t, unit_map(*t), unit_map(*t)};
  r.append(verify_gauge(id), "gauge_identity.");
  r.add(make_check("gauge_identity.phi_is_identity", "identity gauge gives Φ = id",
                   gauge_map(id, src, src, false) == ExactMatrix::identity(src.dim())));

  std::vector<Scalar> lambda = character_values(cfg);
  GaugePair gp = character_gauge(t, lambda);
  const auto& H = t->hopf();
  const auto& G = *H.smash->group;
  int nh = H.dim();
  r.add(check_identity(
      "gauge.coboundary_oracle", "σ(h,k) = λ(gs)λ(g)⁻¹λ(s)⁻¹ ω(h,k)", {nh, nh},
      [&](const int* x) { return gp.target->omega(x[0], x[1]); },
      [&](const int* x) {
        int g = H.smash->group_element(x[0]);
        int k = H.smash->group_element(x[1]);
        return t->omega(x[0], x[1]).scaled(lambda[G.mul(g, k)] * (lambda[g] * lambda[k]).inverse());
      }));
  if (targets(cfg.mutation, "u")) mutate_column(*cfg.mutation, gp.u, t->carrier().unit());
  if (targets(cfg.mutation, "v")) mutate_column(*cfg.mutation, gp.v, t->carrier().unit());
  r.append(verify_gauge(gp));
  r.append(verify_twisted_partial(*gp.target), "gauge_target.");
  SymmetryResult sym = verify_symmetric(gp.target);
  r.append(sym.report, "gauge_target.");
  gp.target = sym.tpa;
  auto tgt = build_crossed_product(gp.target);
  r.append(gauge_isomorphism(gp, src, *tgt));

  std::optional<GaugePair> back;
  try {
    back = extract_gauge(src, *tgt, gauge_map(gp, src, *tgt, false));
  } catch (const Error& e) {
    r.add(make_check("gauge.extract", "(u, v) recovered from Φ", false,
                     e.what()));
    r.skip({{"gauge_extracted.stage", "verification of the extracted gauge"}}, "extraction failed");
    return;
  }
  r.add(make_check("gauge.extract", "(u, v) recovered from Φ", true));
  r.append(verify_gauge(*back), "gauge_extracted.");
  bool same_u = back->u == absorbed(*t, gp.u);
  bool same_v = back->v == absorbed(*gp.target, gp.v);
  r.add(make_check("gauge.extract_round_trip", "extracted u, v equal Σu(h1)(h2·1), Σv(h1)(h2•1)", same_u && same_v,
                   same_u ? "v differs" : "u differs"));
}

// ---------------------------------------------------------------- scenarios

void run_pairing(const ScenarioConfig& cfg, Pipeline& p, Report& top) {
  GroupPtr g = make_group(cfg.group);
  GroupCocycleTable gamma = make_cocycle(cfg, g);
  if (targets(cfg.mutation, "cocycle")) {
    check_index(*cfg.mutation, static_cast<int>(gamma.values().size()));
    auto& v = gamma.values()[cfg.mutation->index];
    v = mutate_scalar(*cfg.mutation, v);
  }
  PairingObjects obj;
  HopfPairing pairing;
  Shared s;
  p.stage("hopf", [&](Report& r) {
    obj = build_pairing_objects(g, cfg.m, {}, subset_indices(*g, cfg.subset), gamma, false);
    HopfPtr h1 = obj.h1;
    if (targets(cfg.mutation, "antipode")) {
      check_index(*cfg.mutation, h1->dim());
      ExactMatrix a = h1->antipode();
      a.column(cfg.mutation->index) = mutate_vec(*cfg.mutation, a.column(cfg.mutation->index), h1->unit());
      h1 = std::make_shared<const HopfAlgebraData>(h1->with_antipode(std::move(a)));
    }
    pairing = HopfPairing{h1, obj.h2, obj.pairing->table};
    if (targets(cfg.mutation, "pairing")) {
      check_index(*cfg.mutation, pairing.table.rows() * pairing.table.cols());
      int row = cfg.mutation->index / pairing.table.cols();
      int col = cfg.mutation->index % pairing.table.cols();
      pairing.table.set(row, col, mutate_scalar(*cfg.mutation, pairing.table.at(row, col)));
    }
    s.tpa = mutate_action(cfg, with_maps(*obj.twisted, h1, obj.twisted->action(), obj.twisted->cocycle()));
    r.append(validate_hopf(*h1), "h1.");
    r.append(validate_hopf(*obj.h2), "h2.");
    r.append(check_pairing(pairing));
    top.info()["dim_h1"] = h1->dim();
    top.info()["dim_h2"] = obj.h2->dim();
    top.info()["dim_a"] = obj.restricted.carrier->dim();
  });
  p.stage("group_cocycle", [&](Report& r) {
    r.add(gamma.check_nonzero());
    r.add(gamma.check_normalized());
    r.add(gamma.check_cocycle_law());
    bool expected = cfg.cocycle != "klein_four";
    bool cob = gamma.is_coboundary();
    r.add(make_check("group_cocycle.coboundary_class", "is_coboundary matches the expected class", cob == expected,
                     cob ? "table is a coboundary" : "table is not a coboundary"));
    top.info()["cocycle_is_coboundary"] = cob;
  });
  p.stage("partial", [&](Report& r) {
    partial_stage(r, s, cfg.cocycle == "trivial" ? CocycleKind::Trivial : CocycleKind::NormalizedCocycle);
    top.info()["cocycle_kind"] = cocycle_kind_name(s.classification.kind);
  });
  p.stage("symmetric", [&](Report& r) { symmetric_stage(r, s); });
  p.stage("crossed", [&](Report& r) {
    crossed_stage(r, s, cfg);
    top.info()["dim_crossed_product"] = s.cp->dim();
  });
  p.stage("cleft", [&](Report& r) { cleft_stage(r, s, cfg); });
  p.stage("gauge", [&](Report& r) { gauge_stage(r, s, cfg); });
}

void run_induced(const ScenarioConfig& cfg, Pipeline& p, Report& top) {
  GroupPtr g = make_group(cfg.group);
  GroupCocycleTable gamma = make_cocycle(cfg, g);
  auto kg = std::make_shared<const HopfAlgebraData>(group_algebra(g));
  GlobalTwistedAction glob;
  Shared s;
  std::vector<int> ys = subset_indices(*g, cfg.subset);
  p.stage("global", [&](Report& r) {
    glob = translation_action(g, kg, gamma);
    if (targets(cfg.mutation, "u")) mutate_column(*cfg.mutation, glob.cocycle, glob.carrier->unit());
    r.append(verify_global(glob));
    r.append(verify_global_cocycle(glob));
  });
  p.stage("induced", [&](Report& r) {
    InducedAction ind = induce_partial(glob, indicator(ys, g->order()));
    s.tpa = mutate_action(cfg, ind.tpa);
    top.info()["dim_h"] = kg->dim();
    top.info()["dim_b"] = glob.carrier->dim();
    top.info()["dim_a"] = s.tpa->dim_a();
    partial_stage(r, s, cfg.cocycle == "trivial" ? CocycleKind::Trivial : CocycleKind::NormalizedCocycle);
    top.info()["cocycle_kind"] = cocycle_kind_name(s.classification.kind);

    GlobalTwistedAction plain = translation_action(g, kg, GroupCocycleTable::trivial(g));
    InducedAction pind = induce_partial(plain, indicator(ys, g->order()));
    const auto& pt = *pind.tpa;
    r.add(make_check("induced.trivial_u", "u trivial gives ω(h,k) = h·(k·1)",
                     pt.cocycle() == trivial_cocycle(pt.hopf(), pt.carrier(), pt.action())));
    InducedAction whole = induce_partial(glob, glob.carrier->unit());
    auto wcp = build_crossed_product(whole.tpa);
    r.add(make_check("induced.whole_is_global", "idempotent 1_B gives the global crossed product of dim |G|·dim B",
                     wcp->dim() == kg->dim() * glob.carrier->dim(), "dimension " + std::to_string(wcp->dim())));
    r.append(verify_corner_embedding(glob, ind));
  });
  p.stage("symmetric", [&](Report& r) { symmetric_stage(r, s); });
  p.stage("crossed", [&](Report& r) {
    crossed_stage(r, s, cfg);
    top.info()["dim_crossed_product"] = s.cp->dim();
  });
  p.stage("cleft", [&](Report& r) { cleft_stage(r, s, cfg); });
  p.stage("gauge", [&](Report& r) { gauge_stage(r, s, cfg); });
}

void run_dictionary(const ScenarioConfig& cfg, Pipeline& p, Report& top) {
  GroupTwistedPartialAction gpa;
  Shared s;
  p.stage("dictionary", [&](Report& r) {
    GroupCocycleTable gamma = make_cocycle(cfg, make_group(cfg.group));
    // w_{a,a} = γ(a,a) 1_a
    GroupTwistedPartialAction base = partial_swap(SparseVec());
    gpa = partial_swap(base.idempotents[1].scaled(gamma(1, 1)));
    if (targets(cfg.mutation, "w")) {
      check_index(*cfg.mutation, static_cast<int>(gpa.w.size()));
      gpa.w[cfg.mutation->index] = mutate_vec(*cfg.mutation, gpa.w[cfg.mutation->index], gpa.carrier->unit());
    }
    r.append(verify_group_partial(gpa));
    auto kg = std::make_shared<const HopfAlgebraData>(group_algebra(gpa.group));
    s.tpa = mutate_action(cfg, group_dictionary(gpa, kg));
    const auto& t = *s.tpa;
    const auto& A = t.carrier();
    const auto& G = *gpa.group;
    int ng = G.order();
    int na = A.dim();
    top.info()["dim_a"] = na;
    top.info()["dim_h"] = ng;
    r.add(check_all("dictionary.unit_idempotents", "g·1 = 1_g is a central idempotent", {ng},
                    [&](const int* x) -> std::optional<std::string> {
                      const SparseVec& e = t.unit_image(x[0]);
                      if (e != gpa.idempotents[x[0]]) return std::string("g·1 differs from 1_g");
                      if (A.multiply(e, e) != e) return std::string("not idempotent");
                      for (int a = 0; a < na; ++a) {
                        if (A.multiply(e, SparseVec::unit(a)) != A.multiply(SparseVec::unit(a), e)) return std::string("not central");
                      }
                      return std::nullopt;
                    }));
    r.add(check_all("dictionary.inner", "α_g∘α_{g⁻¹}(a) w_{g,g⁻¹} = w_{g,g⁻¹} a on D_g", {ng, na},
                    [&](const int* x) -> std::optional<std::string> {
                      int g = x[0];
                      int gi = G.inv(g);
                      SparseVec a = A.multiply(SparseVec::unit(x[1]), gpa.idempotents[g]);
                      const SparseVec& w = gpa.w[g * ng + gi];
                      SparseVec lhs = A.multiply(gpa.alpha[g].apply(gpa.alpha[gi].apply(a)), w);
                      if (lhs != A.multiply(w, a)) return std::string("not conjugation by w_{g,g⁻¹}");
                      return std::nullopt;
                    }));
    GroupTwistedPartialAction back = group_dictionary_inverse(t);
    bool same = back.idempotents == gpa.idempotents && back.alpha == gpa.alpha && back.w == gpa.w;
    r.add(make_check("dictionary.round_trip", "group data → Hopf action → group data is the identity", same));
    partial_stage(r, s, CocycleKind::NormalizedCocycle);
  });
  p.stage("symmetric", [&](Report& r) { symmetric_stage(r, s); });
  p.stage("crossed", [&](Report& r) {
    crossed_stage(r, s, cfg);
    top.info()["dim_crossed_product"] = s.cp->dim();
  });
  p.stage("cleft", [&](Report& r) { cleft_stage(r, s, cfg); });
  p.stage("gauge", [&](Report& r) { gauge_stage(r, s, cfg); });
}

}  // namespace

// ---------------------------------------------------------------- ScenarioConfig

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {"klein4", "smoke_z2", "induced_functions", "group_dictionary"};
  return names;
}

const std::vector<std::string>& mutation_targets(const std::string& scenario) {
  static const std::vector<std::string> pairing = {"omega", "action", "cocycle", "antipode", "pairing",
                                                   "gamma", "gamma_prime", "u", "v"};
  static const std::vector<std::string> induced = {"u", "omega", "action", "gamma", "gamma_prime"};
  static const std::vector<std::string> dictionary = {"w", "omega", "action", "gamma", "gamma_prime", "u", "v"};
  if (uses_pairing(scenario)) return pairing;
  if (scenario == "induced_functions") return induced;
  if (scenario == "group_dictionary") return dictionary;
  throw Error(ErrorKind::Config, "unknown scenario '" + scenario + "'");
}

ScenarioConfig ScenarioConfig::defaults(const std::string& name) {
  ScenarioConfig c;
  c.name = name;
  if (name == "klein4") {
    c.group = "klein4";
    c.n = 4;
    c.subset = {"e", "a", "b"};
    c.cocycle = "klein_four";
    c.character = {0, 1, 0, 1};
  } else if (name == "smoke_z2") {
    c.group = "z2";
    c.n = 2;
    c.subset = {"a"};
    c.cocycle = "trivial";
    c.character = {0, 1};
    c.associativity = "exhaustive";
  } else if (name == "induced_functions") {
    c.group = "klein4";
    c.n = 0;
    c.subset = {"e", "a"};
    c.cocycle = "klein_four";
    c.character = {0, 1, 0, 1};
    c.associativity = "exhaustive";
  } else if (name == "group_dictionary") {
    c.group = "z2";
    c.n = 0;
    c.subset = {"e", "a"};
    c.cocycle = "explicit";
    c.cocycle_table = Json::array({Json::array({1, 1, scalar_to_json(Scalar(-1))})});
    c.character = {0, 1};
    c.associativity = "exhaustive";
  } else {
    throw Error(ErrorKind::Config, "unknown scenario '" + name + "'");
  }
  return c;
}

ScenarioConfig ScenarioConfig::from_json(const Json& j, const std::string& name_hint) {
  if (!j.is_object()) throw Error(ErrorKind::Config, "scenario config must be a JSON object");
  std::string name = j.contains("name") ? j.at("name").get<std::string>() : name_hint;
  if (name.empty()) throw Error(ErrorKind::Config, "scenario config needs a name");
  ScenarioConfig c = defaults(name);
  static const std::vector<std::string> known = {"name", "group", "m", "n", "subset", "cocycle", "cocycle_table",
                                                 "character", "associativity", "sample_count", "seed",
                                                 "field_order", "mutate"};
  try {
    for (const auto& [key, value] : j.items()) {
      if (std::find(known.begin(), known.end(), key) == known.end()) {
        throw Error(ErrorKind::Config, "unknown config field '" + key + "'");
      }
      (void)value;
    }
    if (j.contains("group")) c.group = j.at("group").get<std::string>();
    if (j.contains("m")) c.m = j.at("m").get<int>();
    if (j.contains("n")) c.n = j.at("n").get<int>();
    if (j.contains("subset")) c.subset = j.at("subset").get<std::vector<std::string>>();
    if (j.contains("cocycle")) c.cocycle = j.at("cocycle").get<std::string>();
    if (j.contains("cocycle_table")) c.cocycle_table = j.at("cocycle_table");
    if (j.contains("character")) c.character = j.at("character").get<std::vector<int>>();
    if (j.contains("associativity")) c.associativity = j.at("associativity").get<std::string>();
    if (j.contains("sample_count")) c.sample_count = j.at("sample_count").get<int>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("field_order")) c.field_order = j.at("field_order").get<int>();
    if (j.contains("mutate") && !j.at("mutate").is_null()) c.mutation = Mutation::parse(j.at("mutate").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Config, std::string("bad config value: ") + e.what());
  }
  return c;
}

Json ScenarioConfig::to_json() const {
  Json j;
  j["name"] = name;
  j["group"] = group;
  j["m"] = m;
  j["n"] = n;
  j["subset"] = subset;
  j["cocycle"] = cocycle;
  if (cocycle == "explicit") j["cocycle_table"] = cocycle_table;
  j["character"] = character;
  j["associativity"] = associativity;
  j["sample_count"] = sample_count;
  j["seed"] = seed;
  j["field_order"] = field_order;
  j["mutate"] = mutation ? Json(mutation->to_string()) : Json(nullptr);
  return j;
}

void ScenarioConfig::validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::Config, msg); };
  const auto& names = scenario_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) fail("unknown scenario '" + name + "'");
  GroupPtr g;
  try {
    g = make_group(group);
  } catch (const Error& e) {
    fail(std::string("bad group: ") + e.what());
  }
  if (name == "group_dictionary" && g->order() != 2) fail("group_dictionary uses the partial swap of Z/2");
  if (m < 1) fail("m must be positive");
  if (uses_pairing(name) && n != g->order()) {
    fail("n must equal |G| = " + std::to_string(g->order()) + " (regular representation)");
  }
  if (field_order < 1 || field_order % m != 0) fail("field order must be a positive multiple of m");
  if (subset.empty()) fail("subset X must be nonempty");
  try {
    std::vector<int> idx = subset_indices(*g, subset);
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) fail("subset X has repeated elements");
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Config) throw;
    fail(std::string("bad subset: ") + e.what());
  }
  if (cocycle != "trivial" && cocycle != "klein_four" && cocycle != "explicit") fail("unknown cocycle '" + cocycle + "'");
  GroupCocycleTable gamma = [&] {
    try {
      return make_cocycle(*this, g);
    } catch (const Error& e) {
      throw Error(ErrorKind::Config, std::string("bad cocycle: ") + e.what());
    }
  }();
  for (const auto& v : gamma.values()) {
    if (field_order % v.order() != 0) fail("cocycle value " + v.to_string() + " lies outside Q(ζ_N)");
  }
  if (static_cast<int>(character.size()) != g->order()) fail("character needs one exponent per group element");
  for (int a = 0; a < g->order(); ++a) {
    for (int b = 0; b < g->order(); ++b) {
      if ((character[a] + character[b] - character[g->mul(a, b)]) % m != 0) fail("character is not a homomorphism G → μ_m");
    }
  }
  if (associativity != "sampled" && associativity != "exhaustive") fail("associativity must be sampled or exhaustive");
  if (sample_count < 0) fail("sample count must be non-negative");
  if (mutation) {
    const auto& t = mutation_targets(name);
    if (std::find(t.begin(), t.end(), mutation->target) == t.end()) {
      fail("scenario " + name + " has no mutation target '" + mutation->target + "'");
    }
  }
}

// ---------------------------------------------------------------- run

ScenarioResult run_scenario(const ScenarioConfig& cfg, const RunOptions& opt) {
  cfg.validate();
  ScenarioResult res;
  res.config = cfg;
  res.report = Report(cfg.name);
  Pipeline p(res, opt);
  Report top;
  if (uses_pairing(cfg.name)) {
    run_pairing(cfg, p, top);
  } else if (cfg.name == "induced_functions") {
    run_induced(cfg, p, top);
  } else {
    run_dictionary(cfg, p, top);
  }
  res.report.info() = top.info();
  return res;
}

const std::vector<CatalogueEntry>& mutation_catalogue() {
  static const std::vector<CatalogueEntry> entries = {
      {"klein4", "omega:negate:0", "cocycle.normalization"},
      {"klein4", "omega:negate:65", "cocycle.cocycle_law"},
      {"klein4", "action:negate:0", "partial.unit_action"},
      {"klein4", "action:zero:48", "partial.multiplicative"},
      {"klein4", "cocycle:negate:5", "group_cocycle.law"},
      {"klein4", "antipode:negate:0", "h1.hopf.antipode"},
      {"klein4", "pairing:negate:0", "pairing.product"},
      {"klein4", "gamma:scale:1", "cleft.reconstruction"},
      {"klein4", "gamma_prime:zero:1", "cleft.reconstruction"},
      {"klein4", "u:unit:2", "gauge.absorbs_unit"},
      {"klein4", "v:scale:1", "gauge.convolution_unit"},
      {"induced_functions", "u:negate:5", "global.cocycle_law"},
  };
  return entries;
}

Json scenario_table(const ScenarioConfig& cfg, const std::string& object) {
  static const std::vector<std::string> objects = {"crossed-product", "hopf", "action", "omega"};
  if (std::find(objects.begin(), objects.end(), object) == objects.end()) {
    throw Error(ErrorKind::Config, "unknown table object '" + object + "'");
  }
  cfg.validate();
  ScenarioConfig plain = cfg;
  plain.mutation.reset();
  GroupPtr g = make_group(cfg.group);
  GroupCocycleTable gamma = make_cocycle(cfg, g);
  TpaPtr t;
  if (uses_pairing(cfg.name)) {
    t = build_pairing_objects(g, cfg.m, {}, subset_indices(*g, cfg.subset), gamma).twisted;
  } else if (cfg.name == "induced_functions") {
    auto kg = std::make_shared<const HopfAlgebraData>(group_algebra(g));
    t = induce_partial(translation_action(g, kg, gamma), indicator(subset_indices(*g, cfg.subset), g->order())).tpa;
  } else {
    GroupTwistedPartialAction base = partial_swap(SparseVec());
    auto gpa = partial_swap(base.idempotents[1].scaled(gamma(1, 1)));
    t = group_dictionary(gpa, std::make_shared<const HopfAlgebraData>(group_algebra(gpa.group)));
  }
  Json j;
  j["scenario"] = cfg.name;
  j["object"] = object;
  if (object == "hopf") {
    j["table"] = hopf_to_json(t->hopf());
  } else if (object == "action") {
    j["table"] = linmap_to_json(t->action());
  } else if (object == "omega") {
    j["table"] = linmap_to_json(t->cocycle());
  } else {
    auto cp = build_crossed_product(t);
    j["dim"] = cp->dim();
    j["table"] = algebra_table_to_json(*cp->algebra());
  }
  return j;
}

}  // namespace hp
