#include "doctest.h"
#include "hopfpartial/builders.hpp"
#include "hopfpartial/error.hpp"
#include "hopfpartial/partial.hpp"

using namespace hp;

namespace {

GroupPtr grp(const std::string& name) { return std::make_shared<const FiniteGroup>(FiniteGroup::preset(name)); }
HopfPtr share(HopfAlgebraData h) { return std::make_shared<const HopfAlgebraData>(std::move(h)); }

std::string first_fail(const Report& r) {
  const CheckResult* f = r.first_failure();
  return f ? f->id : std::string();
}

const PairingObjects& klein() {
  static const PairingObjects p = [] {
    GroupPtr g = grp("klein4");
    return build_pairing_objects(g, 2, {}, {0, 1, 2}, GroupCocycleTable::klein_four(g));
  }();
  return p;
}

const PairingObjects& smoke() {
  static const PairingObjects p = [] {
    GroupPtr g = grp("z2");
    return build_pairing_objects(g, 2, {}, {1}, GroupCocycleTable::trivial(g));
  }();
  return p;
}

// Upper triangular 2x2 matrices, basis E11, E12, E22.
AlgebraPtr upper_triangular() {
  std::vector<SparseVec> t(9);
  t[0 * 3 + 0] = SparseVec::unit(0);
  t[0 * 3 + 1] = SparseVec::unit(1);
  t[1 * 3 + 2] = SparseVec::unit(1);
  t[2 * 3 + 2] = SparseVec::unit(2);
  SparseVec one = SparseVec::unit(0);
  one = one + SparseVec::unit(2);
  return std::make_shared<const StructuredAlgebra>(3, std::move(t), one, "T2");
}

// κZ/2 on T2 with a·x = x22 E11; e(a) = E11 is not central.
TpaPtr noncentral_action() {
  auto kg = share(group_algebra(grp("z2")));
  auto a = upper_triangular();
  LinMap act({2, 3}, 3);
  for (int x = 0; x < 3; ++x) act.column(act.flat(0, x)) = SparseVec::unit(x);
  act.column(act.flat(1, 2)) = SparseVec::unit(0);
  LinMap w = trivial_cocycle(*kg, *a, act);
  return std::make_shared<const TwistedPartialAction>(kg, a, act, w);
}

}  // namespace

TEST_CASE("global action viewed as partial") {
  GroupPtr g = grp("klein4");
  auto kg = share(group_algebra(g));
  auto glob = translation_action(g, kg, GroupCocycleTable::trivial(g));
  CHECK(verify_global(glob).passed());
  CHECK(verify_global_cocycle(glob).passed());
  auto ind = induce_partial(glob, glob.carrier->unit());
  CHECK(ind.tpa->dim_a() == 4);
  for (int h = 0; h < 4; ++h) CHECK(ind.tpa->unit_image(h) == ind.tpa->carrier().unit());
  CHECK(verify_twisted_partial(*ind.tpa).passed());
  CHECK(classify_cocycle(*ind.tpa).kind == CocycleKind::Trivial);
}

TEST_CASE("induced action on functions with a non-coboundary cocycle") {
  GroupPtr g = grp("klein4");
  auto kg = share(group_algebra(g));
  auto gamma = GroupCocycleTable::klein_four(g);
  auto glob = translation_action(g, kg, gamma);
  REQUIRE(verify_global(glob).passed());
  REQUIRE(verify_global_cocycle(glob).passed());
  auto ind = induce_partial(glob, indicator({0, 1}, 4));
  const auto& t = *ind.tpa;
  CHECK(t.dim_a() == 2);
  // Y = {e, a} is not translation-closed under b
  CHECK(t.unit_image(2) == SparseVec());
  Report r = verify_twisted_partial(t);
  INFO(first_fail(r));
  CHECK(r.passed());
  auto c = classify_cocycle(t, CocycleKind::NormalizedCocycle);
  CHECK(c.report.passed());
  CHECK_FALSE(c.trivial);

  auto sym = verify_symmetric(ind.tpa, &c.report);
  INFO(first_fail(sym.report));
  CHECK(sym.report.passed());
  REQUIRE(sym.tpa->inverse_cocycle().has_value());
  // ω'(h,k) = Σ(h1k1·1)u⁻¹(h2,k2)(h3·1) with grouplike h, k and u⁻¹ = γ⁻¹ 1
  const auto& T = *sym.tpa;
  for (int h = 0; h < 4; ++h) {
    for (int k = 0; k < 4; ++k) {
      SparseVec want = T.carrier().multiply(T.unit_image(g->mul(h, k)), T.unit_image(h)).scaled(gamma(h, k).inverse());
      CHECK(T.omega_prime(h, k) == want);
    }
  }
}

TEST_CASE("trivial global cocycle induces a trivial cocycle") {
  GroupPtr g = grp("klein4");
  auto kg = share(group_algebra(g));
  auto ind = induce_partial(translation_action(g, kg, GroupCocycleTable::trivial(g)), indicator({0, 1}, 4));
  CHECK(classify_cocycle(*ind.tpa).kind == CocycleKind::Trivial);
}

TEST_CASE("induce_partial preconditions") {
  GroupPtr g = grp("z2");
  auto kg = share(group_algebra(g));
  auto glob = translation_action(g, kg, GroupCocycleTable::trivial(g));
  SparseVec not_idem = SparseVec::unit(0).scaled(Scalar(2));
  CHECK_THROWS_AS(induce_partial(glob, not_idem), Error);
  auto bad = glob;
  bad.action.column(bad.action.flat(1, 0)) = SparseVec::unit(0);
  try {
    induce_partial(bad, glob.carrier->unit());
    FAIL("expected GlobalLawViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GlobalLawViolation);
  }
}

TEST_CASE("restricted coaction reproduces the displayed formula") {
  const auto& p = klein();
  int ng = 4;
  CHECK(p.restricted.carrier->dim() == 48);
  CHECK(p.restricted.image.has_unit_basis());
  const auto& piv = p.restricted.image.pivots();
  for (int j = 0; j < 48; ++j) {
    int kflat = piv[j] / ng;
    int s = piv[j] % ng;
    auto k = torus_exponents(kflat, 2, 4);
    // ρ(t^k ⊗ p_s) = Σ_{r∈X} (t^k ⊗ p_r) ⊗ (t^{k∘r} ⊗ p_{r⁻¹s})
    Accumulator want;
    for (int r : p.subset->members()) {
      std::vector<int> kr(4);
      for (int i = 0; i < 4; ++i) kr[i] = k[p.perm[r][i]];
      int left = kflat * 3 + p.subset->position(r);
      int right = torus_index(kr, 2) * ng + p.group->mul(p.group->inv(r), s);
      want.add(left * p.h2->dim() + right, Scalar(1));
    }
    CHECK(p.restricted.rho.at(j) == want.take());
  }
}

TEST_CASE("restrict_coaction with the unit gives Δ") {
  const auto& p = smoke();
  SparseVec one = p.h2->unit();
  auto rc = restrict_coaction(*p.h2, one);
  CHECK(rc.carrier->dim() == p.h2->dim());
  for (int i = 0; i < p.h2->dim(); ++i) {
    SparseVec x = rc.image.basis()[i];
    SparseVec got;
    Accumulator acc;
    for (const auto& e : rc.rho.at(i)) {
      int a = e.index / p.h2->dim();
      for (const auto& b : rc.image.basis()[a]) acc.add(b.index * p.h2->dim() + e.index % p.h2->dim(), e.value * b.value);
    }
    CHECK(acc.take() == p.h2->coalgebra().delta_vec(x));
  }
}

TEST_CASE("pairing action matches the closed form entry by entry") {
  const auto& p = klein();
  const auto& t = *p.partial;
  const auto& G = *p.group;
  const auto& piv = p.restricted.image.pivots();
  for (int h = 0; h < 64; ++h) {
    int g = h % 4;
    auto theta = torus_exponents(h / 4, 2, 4);
    for (int j = 0; j < 48; ++j) {
      int s = piv[j] % 4;
      auto k = torus_exponents(piv[j] / 4, 2, 4);
      int target = G.mul(G.inv(s), g);
      SparseVec want;
      if (p.subset->contains(target)) {
        // exp{i Σ k_i θ_{g⁻¹s(i)}} on t^k ⊗ p_{s⁻¹g}
        const auto& pi = p.perm[G.mul(G.inv(g), s)];
        long e = 0;
        for (int i = 0; i < 4; ++i) e += k[i] * theta[pi[i]];
        want = SparseVec::single((piv[j] / 4) * 3 + p.subset->position(target), Scalar::root_of_unity(2, e));
      }
      CHECK(t.act(h, j) == want);
    }
  }
}

TEST_CASE("Klein-four twisted partial action") {
  const auto& p = klein();
  const auto& t = *p.twisted;
  CHECK(t.dim_h() == 64);
  CHECK(t.dim_a() == 48);
  Report r = verify_twisted_partial(t);
  INFO(first_fail(r));
  CHECK(r.passed());
  auto c = classify_cocycle(t, CocycleKind::NormalizedCocycle);
  CHECK(c.report.passed());
  // ω(h,l) = γ(g,s) h·(l·1)
  for (int h = 0; h < 64; h += 5) {
    for (int l = 0; l < 64; l += 3) {
      CHECK(t.omega(h, l) == t.act(h, t.unit_image(l)).scaled((*p.gamma)(h % 4, l % 4)));
    }
  }
}

TEST_CASE("Klein-four action is symmetric") {
  const auto& p = klein();
  auto sym = verify_symmetric(p.twisted);
  INFO(first_fail(sym.report));
  CHECK(sym.report.passed());
  CHECK(sym.tpa->inverse_cocycle().has_value());
}

TEST_CASE("negating an ω entry breaks normalization first") {
  const auto& p = klein();
  LinMap w = p.twisted->cocycle();
  auto& col = w.column(0);
  REQUIRE(!col.is_zero());
  col = col.scaled(Scalar(-1));
  TwistedPartialAction bad(p.twisted->hopf_ptr(), p.twisted->carrier_ptr(), p.twisted->action(), w);
  auto c = classify_cocycle(bad);
  CHECK(first_fail(c.report) == "cocycle.normalization");
  CHECK(c.kind == CocycleKind::General);
}

TEST_CASE("non-normalized group table yields a general cocycle") {
  const auto& p = smoke();
  GroupPtr g = p.group;
  GroupCocycleTable gamma(g, {Scalar(2), Scalar(1), Scalar(1), Scalar(3)});
  CHECK_THROWS_AS(cocycle_twist_smash(*p.partial, gamma), Error);
  auto t = cocycle_twist_smash(*p.partial, gamma, false);
  CHECK(classify_cocycle(*t).kind == CocycleKind::General);
}

TEST_CASE("trivial γ gives the untwisted cocycle") {
  const auto& p = smoke();
  CHECK(p.twisted->cocycle() == trivial_cocycle(*p.h1, *p.partial->carrier_ptr(), p.partial->action()));
  CHECK(classify_cocycle(*p.twisted).kind == CocycleKind::Trivial);
  auto sym = verify_symmetric(p.twisted);
  CHECK(sym.report.passed());
}

TEST_CASE("non-central h·1 breaks the symmetric clauses") {
  auto t = noncentral_action();
  CHECK(verify_twisted_partial(*t).passed());
  auto sym = verify_symmetric(t);
  const CheckResult* f1 = sym.report.find("symmetric.f1_central");
  const CheckResult* f2 = sym.report.find("symmetric.f2_central");
  REQUIRE(f1);
  REQUIRE(f2);
  CHECK(f2->status == Status::Fail);
  CHECK_FALSE(f2->witnesses.empty());
}

TEST_CASE("group dictionary round trip") {
  SparseVec d_a = indicator({0, 1}, 3);
  auto gpa = partial_swap(d_a.scaled(Scalar(-1)));
  Report r = verify_group_partial(gpa);
  INFO(first_fail(r));
  CHECK(r.passed());
  auto kg = share(group_algebra(gpa.group));
  auto t = group_dictionary(gpa, kg);
  CHECK(verify_twisted_partial(*t).passed());
  auto back = group_dictionary_inverse(*t);
  CHECK(back.idempotents == gpa.idempotents);
  CHECK(back.w == gpa.w);
  REQUIRE(back.alpha.size() == gpa.alpha.size());
  for (std::size_t i = 0; i < back.alpha.size(); ++i) CHECK(back.alpha[i] == gpa.alpha[i]);
  auto again = group_dictionary(back, kg);
  CHECK(again->action() == t->action());
  CHECK(again->cocycle() == t->cocycle());
}

TEST_CASE("global group action gives unit idempotents") {
  auto gpa = partial_swap(indicator({0, 1}, 3));
  gpa.idempotents[1] = gpa.carrier->unit();
  gpa.alpha[1] = ExactMatrix::from_columns(3, {SparseVec::unit(1), SparseVec::unit(0), SparseVec::unit(2)});
  gpa.w = {gpa.carrier->unit(), gpa.carrier->unit(), gpa.carrier->unit(), gpa.carrier->unit()};
  auto t = group_dictionary(gpa, share(group_algebra(gpa.group)));
  for (int g = 0; g < 2; ++g) CHECK(t->unit_image(g) == gpa.carrier->unit());
}

TEST_CASE("non-invertible w is rejected by the inverse dictionary") {
  auto gpa = partial_swap(SparseVec::unit(0));
  auto t = group_dictionary(gpa, share(group_algebra(gpa.group)));
  try {
    group_dictionary_inverse(*t);
    FAIL("expected PreconditionViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionViolation);
  }
}
