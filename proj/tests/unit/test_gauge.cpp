#include "doctest.h"
#include "hopfpartial/builders.hpp"
#include "hopfpartial/error.hpp"
#include "hopfpartial/gauge.hpp"

using namespace hp;

namespace {

GroupPtr grp(const std::string& name) { return std::make_shared<const FiniteGroup>(FiniteGroup::preset(name)); }

std::string first_fail(const Report& r) {
  const CheckResult* f = r.first_failure();
  return f ? f->id : std::string();
}

TpaPtr smoke_tpa() {
  static const TpaPtr t = [] {
    GroupPtr g = grp("z2");
    auto p = build_pairing_objects(g, 2, {}, {1}, GroupCocycleTable::trivial(g));
    return verify_symmetric(p.twisted).tpa;
  }();
  return t;
}

LinMap unit_map(const TwistedPartialAction& t) {
  std::vector<SparseVec> cols;
  for (int h = 0; h < t.dim_h(); ++h) cols.push_back(t.unit_image(h));
  return LinMap({t.dim_h()}, ExactMatrix::from_columns(t.dim_a(), cols));
}

GaugePair sign_gauge() { return character_gauge(smoke_tpa(), {Scalar(1), Scalar(-1)}); }

}  // namespace

TEST_CASE("identity gauge") {
  TpaPtr t = smoke_tpa();
  GaugePair gp{t, t, unit_map(*t), unit_map(*t)};
  Report r = verify_gauge(gp);
  INFO(first_fail(r));
  CHECK(r.passed());
  auto cp = build_crossed_product(t);
  CHECK(gauge_map(gp, *cp, *cp, false) == ExactMatrix::identity(cp->dim()));
  CHECK(gauge_isomorphism(gp, *cp, *cp).passed());
  GaugePair back = extract_gauge(*cp, *cp, ExactMatrix::identity(cp->dim()));
  CHECK(back.u == gp.u);
  CHECK(back.v == gp.v);
}

TEST_CASE("character gauge twists the cocycle by a coboundary") {
  GaugePair gp = sign_gauge();
  const auto& S = *gp.source;
  const auto& T = *gp.target;
  const auto& H = S.hopf();
  std::vector<Scalar> lambda = {Scalar(1), Scalar(-1)};
  const auto& G = *H.smash->group;
  for (int h = 0; h < H.dim(); ++h) {
    for (int k = 0; k < H.dim(); ++k) {
      int g = H.smash->group_element(h);
      int s = H.smash->group_element(k);
      Scalar c = lambda[G.mul(g, s)] * (lambda[g] * lambda[s]).inverse();
      CHECK(T.omega(h, k) == S.omega(h, k).scaled(c));
    }
    for (int a = 0; a < S.dim_a(); ++a) CHECK(T.act(h, a) == S.act(h, a));
  }
  Report r = verify_gauge(gp);
  INFO(first_fail(r));
  CHECK(r.passed());
  CHECK(verify_twisted_partial(T).passed());
  SymmetryResult sym = verify_symmetric(gp.target);
  CHECK(sym.report.passed());

  auto src = build_crossed_product(gp.source);
  auto tgt = build_crossed_product(sym.tpa);
  gp.target = sym.tpa;
  Report iso = gauge_isomorphism(gp, *src, *tgt);
  INFO(first_fail(iso));
  CHECK(iso.passed());

  ExactMatrix phi = gauge_map(gp, *src, *tgt, false);
  GaugePair back = extract_gauge(*src, *tgt, phi);
  CHECK(back.u == gp.u);
  CHECK(back.v == gp.v);
  CHECK(verify_gauge(back).passed());
}

TEST_CASE("u breaking the absorption") {
  GroupPtr g = grp("klein4");
  auto p = build_pairing_objects(g, 2, {}, {0, 1, 2}, GroupCocycleTable::klein_four(g));
  GaugePair gp = character_gauge(p.twisted, {Scalar(1), Scalar(-1), Scalar(1), Scalar(-1)});
  Report ok = verify_gauge(gp);
  INFO(first_fail(ok));
  CHECK(ok.passed());
  const auto& S = *gp.source;
  // u_b has λ(b) = 1 and u_b·1 ≠ 1
  int b = 2;
  REQUIRE(S.unit_image(b) != S.carrier().unit());
  gp.u.column(b) = S.carrier().unit();
  Report r = verify_gauge(gp);
  CHECK(first_fail(r) == "gauge.absorbs_unit");
  CHECK(r.failure_count() == 1);
  CHECK(!r.find("gauge.absorbs_unit")->witnesses.empty());
}

TEST_CASE("v breaking u*v = h·1 breaks Ψ∘Φ") {
  GaugePair gp = sign_gauge();
  SymmetryResult sym = verify_symmetric(gp.target);
  gp.target = sym.tpa;
  auto src = build_crossed_product(gp.source);
  auto tgt = build_crossed_product(gp.target);
  int h = 2;
  REQUIRE(!gp.v.at(h).is_zero());
  gp.v.column(h) = gp.v.at(h).scaled(Scalar(2));
  CHECK(first_fail(verify_gauge(gp)) == "gauge.convolution_unit");
  Report iso = gauge_isomorphism(gp, *src, *tgt);
  CHECK(iso.find("gauge_iso.psi_phi")->status == Status::Fail);
}

TEST_CASE("swap automorphism is not left A-linear") {
  auto h = std::make_shared<const HopfAlgebraData>(trivial_hopf());
  AlgebraPtr a = diagonal_algebra(2);
  LinMap action({1, 2}, ExactMatrix::identity(2));
  LinMap omega({1, 1}, ExactMatrix::from_columns(2, {a->unit()}));
  auto t = std::make_shared<const TwistedPartialAction>(h, a, action, omega);
  auto cp = build_crossed_product(t);
  REQUIRE(cp->dim() == 2);
  ExactMatrix swap = ExactMatrix::from_columns(2, {cp->element(1, 0), cp->element(0, 0)});
  try {
    extract_gauge(*cp, *cp, swap);
    FAIL("expected NotALinear");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotALinear);
  }
  ExactMatrix twice = ExactMatrix::identity(2);
  twice.set(0, 0, Scalar(2));
  CHECK_THROWS_AS(extract_gauge(*cp, *cp, twice), Error);
}
