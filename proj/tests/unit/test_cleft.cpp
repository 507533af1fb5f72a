#include "doctest.h"
#include "hopfpartial/builders.hpp"
#include "hopfpartial/cleft.hpp"
#include "hopfpartial/error.hpp"

using namespace hp;

namespace {

GroupPtr grp(const std::string& name) { return std::make_shared<const FiniteGroup>(FiniteGroup::preset(name)); }
HopfPtr share(HopfAlgebraData h) { return std::make_shared<const HopfAlgebraData>(std::move(h)); }

std::string first_fail(const Report& r) {
  const CheckResult* f = r.first_failure();
  return f ? f->id : std::string();
}

TpaPtr symmetric(TpaPtr t) {
  SymmetryResult s = verify_symmetric(std::move(t));
  REQUIRE(s.report.passed());
  return s.tpa;
}

TpaPtr smoke_tpa() {
  GroupPtr g = grp("z2");
  auto p = build_pairing_objects(g, 2, {}, {1}, GroupCocycleTable::trivial(g));
  return symmetric(p.twisted);
}

TpaPtr global_tpa() {
  GroupPtr g = grp("klein4");
  auto kg = share(group_algebra(g));
  auto glob = translation_action(g, kg, GroupCocycleTable::klein_four(g));
  return symmetric(std::make_shared<const TwistedPartialAction>(glob.hopf, glob.carrier, glob.action, glob.cocycle));
}

void round_trip(const CrossedProduct& cp) {
  CleftData cd = build_cleft_maps(cp);
  Report c = verify_cleft_construction(cd, cp);
  INFO(first_fail(c));
  CHECK(c.passed());
  Report r = verify_partially_cleft(cd);
  INFO(first_fail(r));
  CHECK(r.passed());
  CleftData n = normalize_gamma_prime(cd);
  CHECK(verify_gamma_normalization(cd, n).passed());
  CHECK(n.gamma_prime == cd.gamma_prime);
  CHECK(verify_partially_cleft(n).passed());
  TpaPtr rebuilt = reconstruct_action(cd);
  Report rec = compare_reconstruction(cp, cd, *rebuilt);
  INFO(first_fail(rec));
  CHECK(rec.passed());
  CHECK(verify_twisted_partial(*rebuilt).passed());
  auto rcp = build_crossed_product(rebuilt);
  Report iso = cleft_isomorphism(cd, *rcp);
  INFO(first_fail(iso));
  CHECK(iso.passed());
}

}  // namespace

TEST_CASE("classical cleft data of a global twisted action") {
  TpaPtr t = global_tpa();
  auto cp = build_crossed_product(t);
  CleftData cd = build_cleft_maps(*cp);
  const auto& H = t->hopf();
  for (int h = 0; h < H.dim(); ++h) {
    // the cocycle values are ±1 so ω'(S(h), h) = ω(S(h), h)⁻¹ ∈ κ1
    SparseVec w = t->omega_prime(H.S(h), SparseVec::unit(h));
    CHECK(cd.gamma_prime.at(h) == cp->element(w, H.S(h)));
    CHECK(convolution(ConvolutionElement{H.coalgebra_ptr(), cd.extension.carrier, cd.gamma},
                      ConvolutionElement{H.coalgebra_ptr(), cd.extension.carrier, cd.gamma_prime})
              .map.at(h) == cd.extension.carrier->unit());
  }
  round_trip(*cp);
}

TEST_CASE("trivial cocycle and global action give γ'(h) = 1#S(h)") {
  GroupPtr g = grp("z3");
  auto kg = share(group_algebra(g));
  auto glob = translation_action(g, kg, GroupCocycleTable::trivial(g));
  auto t = symmetric(std::make_shared<const TwistedPartialAction>(glob.hopf, glob.carrier, glob.action, glob.cocycle));
  auto cp = build_crossed_product(t);
  CleftData cd = build_cleft_maps(*cp);
  for (int h = 0; h < 3; ++h) CHECK(cd.gamma_prime.at(h) == cp->element(t->carrier().unit(), kg->S(h)));
  CHECK(verify_partially_cleft(cd).passed());
}

TEST_CASE("smoke cleft round trip") {
  auto cp = build_crossed_product(smoke_tpa());
  round_trip(*cp);
}

TEST_CASE("cleft maps need ω'") {
  GroupPtr g = grp("z2");
  auto p = build_pairing_objects(g, 2, {}, {1}, GroupCocycleTable::trivial(g));
  auto cp = build_crossed_product(p.twisted);
  CHECK_THROWS_AS(build_cleft_maps(*cp), Error);
}

TEST_CASE("zeroing γ' on one element breaks reconstruction first") {
  auto cp = build_crossed_product(smoke_tpa());
  CleftData cd = build_cleft_maps(*cp);
  cd.gamma_prime.column(2) = SparseVec();
  Report r = verify_partially_cleft(cd);
  CHECK(first_fail(r) == "cleft.reconstruction");
  const CheckResult* rec = r.find("cleft.reconstruction");
  REQUIRE(rec);
  CHECK(!rec->witnesses.empty());
}

TEST_CASE("scaling γ breaks reconstruction and multiplicativity") {
  auto cp = build_crossed_product(smoke_tpa());
  CleftData cd = build_cleft_maps(*cp);
  TpaPtr rebuilt = reconstruct_action(cd);
  auto rcp = build_crossed_product(rebuilt);
  CleftData bad = cd;
  bad.gamma.column(2) = bad.gamma.at(2).scaled(Scalar(2));
  CHECK(first_fail(verify_partially_cleft(bad)) == "cleft.reconstruction");
  Report iso = cleft_isomorphism(bad, *rcp);
  const CheckResult* m = iso.find("cleft_iso.multiplicative");
  REQUIRE(m);
  CHECK(m->status == Status::Fail);
}
