#include "doctest.h"
#include "hopfpartial/constructors.hpp"
#include "hopfpartial/error.hpp"

using namespace hp;

namespace {

GroupPtr grp(const std::string& name) { return std::make_shared<FiniteGroup>(FiniteGroup::preset(name)); }
HopfPtr share(HopfAlgebraData h) { return std::make_shared<HopfAlgebraData>(std::move(h)); }

void require_valid(const HopfAlgebraData& h) {
  Report r = validate_hopf(h);
  const CheckResult* f = r.first_failure();
  INFO(h.name() << " " << (f ? f->id : std::string()));
  CHECK(r.passed());
}

// (κC_2)^⊗n ⋊ κG with G acting through its regular representation (n = |G|).
struct KleinPair {
  HopfPtr torus, kg, dual, h1, h2;
};

KleinPair klein_pair(const std::string& group, int m) {
  KleinPair p;
  GroupPtr g = grp(group);
  int n = g->order();
  auto perm = g->regular_representation();
  p.torus = share(truncated_torus(m, n));
  p.kg = share(group_algebra(g));
  p.dual = share(dual_hopf(*p.kg));
  p.h1 = share(smash_product(permutation_action(p.kg, p.torus, m, n, perm)));
  p.h2 = share(cosemidirect_product(permutation_coaction(p.dual, p.torus, m, n, perm), g));
  return p;
}

}  // namespace

TEST_CASE("group algebras and duals validate") {
  for (const char* name : {"trivial", "z2", "z3", "klein4", "s3", "q8"}) {
    auto h = group_algebra(grp(name));
    require_valid(h);
    require_valid(dual_hopf(h));
    CHECK(h.grouplike_basis());
  }
  CHECK(group_algebra(grp("trivial")).dim() == 1);
}

TEST_CASE("corrupted antipode is caught") {
  auto h = group_algebra(grp("z3"));
  auto bad = h.with_antipode(ExactMatrix::identity(3));
  CHECK_FALSE(validate_hopf(bad).passed());
}

TEST_CASE("truncated tori") {
  CHECK(truncated_torus(1, 3).dim() == 1);
  auto t = truncated_torus(2, 4);
  CHECK(t.dim() == 16);
  require_valid(t);
  CHECK(torus_index(torus_exponents(11, 2, 4), 2) == 11);
  CHECK(torus_exponents(11, 2, 4) == std::vector<int>{1, 0, 1, 1});
  // x^(1,0,1,1) * x^(1,1,0,1) = x^(0,1,1,0)
  CHECK(t.algebra().product(11, 13) == SparseVec::unit(6));
  auto c2 = truncated_torus(2, 1);
  auto z2 = group_algebra(grp("z2"));
  CHECK(c2.algebra().table() == z2.algebra().table());
}

TEST_CASE("permutation action is a module algebra") {
  GroupPtr g = grp("z2");
  auto act = permutation_action(share(group_algebra(g)), share(truncated_torus(2, 2)), 2, 2, g->regular_representation());
  CHECK(check_module_algebra(act).passed());
  // swap: x^(1,0) -> x^(0,1)
  CHECK(act.action.at(1, 2) == SparseVec::unit(1));
}

TEST_CASE("small smash and cosemidirect products") {
  auto p = klein_pair("z2", 2);
  CHECK(p.h1->dim() == 8);
  CHECK(p.h2->dim() == 8);
  require_valid(*p.h1);
  require_valid(*p.h2);
}

TEST_CASE("trivial action gives the tensor Hopf algebra") {
  GroupPtr g = grp("z2");
  auto kg = share(group_algebra(g));
  auto t = share(truncated_torus(3, 1));
  auto act = permutation_action(kg, t, 3, 1, {{0}, {0}});
  auto s = smash_product(act);
  auto ten = tensor_hopf(*t, *kg);
  CHECK(s.algebra().table() == ten.algebra().table());
  for (int i = 0; i < s.dim(); ++i) CHECK(s.S(i) == ten.S(i));
}

TEST_CASE("trivial group cosemidirect is the carrier") {
  GroupPtr g = grp("trivial");
  auto dual = share(dual_hopf(group_algebra(g)));
  auto t = share(truncated_torus(2, 2));
  auto h = cosemidirect_product(permutation_coaction(dual, t, 2, 2, {{0, 1}}), g);
  CHECK(h.dim() == 4);
  CHECK(h.algebra().table() == t->algebra().table());
  require_valid(h);
}

TEST_CASE("klein four products of dimension 64") {
  auto p = klein_pair("klein4", 2);
  CHECK(p.h1->dim() == 64);
  CHECK(p.h2->dim() == 64);
  require_valid(*p.h1);
  require_valid(*p.h2);
}

TEST_CASE("module law violations are reported") {
  GroupPtr g = grp("z2");
  auto act = permutation_action(share(group_algebra(g)), share(truncated_torus(2, 2)), 2, 2, g->regular_representation());
  act.action.column(act.action.flat(1, 1)) = SparseVec::unit(3);
  CHECK_THROWS_AS(smash_product(act), Error);
}

TEST_CASE("cyclic pairings") {
  for (int m : {2, 3, 5}) {
    auto a = share(truncated_torus(m, 1, "x"));
    auto b = share(truncated_torus(m, 1, "t"));
    ExactMatrix t(m, m);
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) t.set(j, k, Scalar::root_of_unity(m, j * k));
    }
    CHECK_NOTHROW(hopf_pairing(a, b, t));
    if (m == 2) CHECK(t.at(1, 1) == Scalar(-1));
    ExactMatrix bad = t;
    bad.set(1, 1, Scalar(2));
    CHECK_THROWS_AS(hopf_pairing(a, b, bad), Error);
  }
}

TEST_CASE("group algebra pairs with its dual") {
  auto kg = share(group_algebra(grp("s3")));
  auto d = share(dual_hopf(*kg));
  CHECK_NOTHROW(hopf_pairing(kg, d, ExactMatrix::identity(6)));
}

TEST_CASE("smash and cosemidirect pairing") {
  for (const char* g : {"z2", "klein4"}) {
    auto p = klein_pair(g, 2);
    int n = p.kg->dim();
    ExactMatrix t = torus_pairing_table(*p.h1, *p.h2, 2, n);
    // oracle: δ_{g,s} (-1)^{k·θ}
    for (int i = 0; i < p.h1->dim(); ++i) {
      for (int j = 0; j < p.h2->dim(); ++j) {
        auto th = torus_exponents(i / n, 2, n);
        auto k = torus_exponents(j / n, 2, n);
        int dot = 0;
        for (int x = 0; x < n; ++x) dot += th[x] * k[x];
        Scalar want = i % n != j % n ? Scalar(0) : Scalar(dot % 2 ? -1 : 1);
        CHECK(t.at(i, j) == want);
      }
    }
    CHECK(check_pairing({p.h1, p.h2, t}).passed());
  }
  auto p3 = klein_pair("z2", 3);
  CHECK(check_pairing({p3.h1, p3.h2, torus_pairing_table(*p3.h1, *p3.h2, 3, 2)}).passed());
}

TEST_CASE("iterated comultiplication agrees with the other bracketing") {
  auto h = group_algebra(grp("s3"));
  auto d = dual_hopf(h);
  LinMap d4 = iterated_comult(d, 4);
  int n = d.dim();
  for (int i = 0; i < n; ++i) {
    // (Δ⊗id⊗id)(Δ⊗id)Δ, built independently
    Accumulator acc;
    for (const auto& a : d.coalgebra().delta(i)) {
      for (const auto& b : d.coalgebra().delta(a.left)) {
        for (const auto& c : d.coalgebra().delta(b.left)) {
          acc.add(((c.left * n + c.right) * n + b.right) * n + a.right, a.coef * b.coef * c.coef);
        }
      }
    }
    CHECK(d4.at(i) == acc.take());
  }
}

TEST_CASE("double dual recovers the algebra") {
  auto h = dual_hopf(truncated_torus(3, 1));
  auto hh = dual_hopf(h);
  auto orig = truncated_torus(3, 1);
  CHECK(hh.algebra().table() == orig.algebra().table());
  for (int i = 0; i < 3; ++i) CHECK(hh.S(i) == orig.S(i));
}
