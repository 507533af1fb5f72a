#include "doctest.h"
#include "hopfpartial/builders.hpp"
#include "hopfpartial/crossed.hpp"
#include "hopfpartial/error.hpp"

using namespace hp;

namespace {

GroupPtr grp(const std::string& name) { return std::make_shared<const FiniteGroup>(FiniteGroup::preset(name)); }
HopfPtr share(HopfAlgebraData h) { return std::make_shared<const HopfAlgebraData>(std::move(h)); }

std::string first_fail(const Report& r) {
  const CheckResult* f = r.first_failure();
  return f ? f->id : std::string();
}

const PairingObjects& smoke() {
  static const PairingObjects p = [] {
    GroupPtr g = grp("z2");
    return build_pairing_objects(g, 2, {}, {1}, GroupCocycleTable::trivial(g));
  }();
  return p;
}

const PairingObjects& klein() {
  static const PairingObjects p = [] {
    GroupPtr g = grp("klein4");
    return build_pairing_objects(g, 2, {}, {0, 1, 2}, GroupCocycleTable::klein_four(g));
  }();
  return p;
}

TpaPtr with_cocycle(const TwistedPartialAction& t, LinMap w) {
  return std::make_shared<const TwistedPartialAction>(t.hopf_ptr(), t.carrier_ptr(), t.action(), std::move(w));
}

}  // namespace

TEST_CASE("smoke crossed product") {
  auto cp = build_crossed_product(smoke().twisted);
  Report r = verify_crossed_product(*cp);
  INFO(first_fail(r));
  CHECK(r.passed());
  CHECK(cp->dim() < cp->ambient_dim());
  AssociativityOptions opt;
  opt.mode = AssociativityMode::Exhaustive;
  Report a = verify_associativity(*cp, opt);
  CHECK(a.passed());
  const CheckResult* ex = a.find("associativity.exhaustive");
  REQUIRE(ex);
  CHECK(ex->status == Status::Pass);
  CHECK(ex->evaluated == static_cast<std::uint64_t>(cp->dim()) * cp->dim() * cp->dim());
}

TEST_CASE("global action gives the full smash product") {
  GroupPtr g = grp("klein4");
  auto kg = share(group_algebra(g));
  auto glob = translation_action(g, kg, GroupCocycleTable::klein_four(g));
  auto tpa = std::make_shared<const TwistedPartialAction>(glob.hopf, glob.carrier, glob.action, glob.cocycle);
  auto cp = build_crossed_product(tpa);
  CHECK(cp->dim() == 16);
  CHECK(verify_crossed_product(*cp).passed());
}

TEST_CASE("trivial cocycle recovers the partial smash product") {
  const auto& p = smoke();
  const auto& t = *p.partial;
  auto cp = build_crossed_product(p.twisted);
  const auto& A = t.carrier();
  const auto& H = t.hopf();
  int nh = H.dim();
  for (int a = 0; a < A.dim(); ++a) {
    for (int h = 0; h < nh; ++h) {
      for (int b = 0; b < A.dim(); ++b) {
        for (int l = 0; l < nh; ++l) {
          SparseVec got = cp->multiply(cp->element(a, h), cp->element(b, l));
          // Σ a(h1·(b(l1·1))) # h2l2
          Accumulator acc;
          for (const auto& s : H.sweedler(h, 2)) {
            for (const auto& u : H.sweedler(l, 2)) {
              SparseVec inner = A.multiply(SparseVec::unit(b), t.unit_image(u.idx[0]));
              acc.add(tensor_vec(A.multiply(SparseVec::unit(a), t.act(s.idx[0], inner)),
                                 H.algebra().product(s.idx[1], u.idx[1]), nh),
                      s.coef * u.coef);
            }
          }
          CHECK(got == cp->coords(cp->projector().apply(acc.take())));
        }
      }
    }
  }
}

TEST_CASE("broken normalization makes π non-idempotent") {
  const auto& t = *smoke().twisted;
  LinMap w = t.cocycle();
  int one = 0;
  w.column(w.flat(one, one)) = w.at(one, one).scaled(Scalar(-1));
  try {
    build_crossed_product(with_cocycle(t, w));
    FAIL("expected NormalizationFailure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NormalizationFailure);
  }
}

TEST_CASE("comodule structure and coinvariants") {
  auto cp = build_crossed_product(smoke().twisted);
  auto ca = comodule_structure(*cp);
  Report r = verify_comodule_algebra(ca);
  INFO(first_fail(r));
  CHECK(r.passed());
  CHECK(ca.rho.apply(cp->algebra()->unit()) == tensor_vec(cp->algebra()->unit(), smoke().h1->unit(), smoke().h1->dim()));
  Subspace co = coinvariants(ca);
  const auto& A = cp->tpa().carrier();
  CHECK(co.dim() == A.dim());
  std::vector<SparseVec> a1;
  for (int a = 0; a < A.dim(); ++a) a1.push_back(cp->element(SparseVec::unit(a), smoke().h1->unit()));
  CHECK(co == span(cp->dim(), a1));
  CHECK(check_subalgebra("coinvariants.subalgebra", *cp->algebra(), co).passed());
}

TEST_CASE("coinvariants of H under Δ and of a trivial coaction") {
  auto h = share(group_algebra(grp("z3")));
  ComoduleAlgebra delta{h->algebra_ptr(), h, LinMap({3}, ExactMatrix::from_columns(9, {
                                                             h->coalgebra().delta_vec(SparseVec::unit(0)),
                                                             h->coalgebra().delta_vec(SparseVec::unit(1)),
                                                             h->coalgebra().delta_vec(SparseVec::unit(2)),
                                                         }))};
  CHECK(verify_comodule_algebra(delta).passed());
  Subspace co = coinvariants(delta);
  CHECK(co == span(3, {h->unit()}));
  std::vector<SparseVec> triv;
  for (int b = 0; b < 3; ++b) triv.push_back(tensor_vec(SparseVec::unit(b), h->unit(), 3));
  ComoduleAlgebra trivial{h->algebra_ptr(), h, LinMap({3}, ExactMatrix::from_columns(9, triv))};
  CHECK(coinvariants(trivial).dim() == 3);
}

TEST_CASE("corner of the global crossed product") {
  GroupPtr g = grp("klein4");
  auto kg = share(group_algebra(g));
  auto glob = translation_action(g, kg, GroupCocycleTable::klein_four(g));
  auto ind = induce_partial(glob, indicator({0, 1}, 4));
  Report r = verify_corner_embedding(glob, ind);
  INFO(first_fail(r));
  CHECK(r.passed());
  auto whole = induce_partial(glob, glob.carrier->unit());
  CHECK(verify_corner_embedding(glob, whole).passed());
}

TEST_CASE("Klein-four crossed product") {
  auto cp = build_crossed_product(klein().twisted);
  CHECK(cp->dim() == 2304);
  CHECK(cp->image().has_unit_basis());
  AssociativityOptions opt;
  opt.samples = 2000;
  Report a = verify_associativity(*cp, opt);
  INFO(first_fail(a));
  CHECK(a.passed());
}

TEST_CASE("criterion and sampled associativity agree on a broken cocycle") {
  const auto& p = klein();
  GroupCocycleTable gamma = *p.gamma;
  gamma.values()[5] = gamma.values()[5] * Scalar(-1);
  auto bad = cocycle_twist_smash(*p.partial, gamma);
  auto cp = build_crossed_product(bad);
  AssociativityOptions opt;
  opt.samples = 2000;
  Report a = verify_associativity(*cp, opt);
  CHECK(a.find("associativity.criterion_twisting")->status == Status::Pass);
  CHECK(a.find("associativity.criterion_cocycle")->status == Status::Fail);
  CHECK(a.find("associativity.sampled")->status == Status::Fail);
}
