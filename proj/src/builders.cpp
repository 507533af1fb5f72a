#include "hopfpartial/builders.hpp"

#include "hopfpartial/error.hpp"

namespace hp {

namespace {

template <class T>
std::shared_ptr<const T> share(T value) {
  return std::make_shared<const T>(std::move(value));
}

}  // namespace

SparseVec subset_idempotent(const HopfAlgebraData& h2, const GroupSubset& x) {
  if (!h2.smash || h2.smash->inner_dim != x.group().order()) {
    throw Error(ErrorKind::NotSmashShape, h2.name() + " has no (κG)* factor matching the subset's group");
  }
  // the torus unit has index 0
  Accumulator acc;
  for (int s : x.members()) acc.add(s, Scalar(1));
  return acc.take();
}

PairingObjects build_pairing_objects(GroupPtr group, int m, std::vector<std::vector<int>> perm,
                                     const std::vector<int>& subset, const GroupCocycleTable& gamma,
                                     bool require_normalized) {
  PairingObjects p;
  p.group = group;
  p.perm = perm.empty() ? group->regular_representation() : std::move(perm);
  if (static_cast<int>(p.perm.size()) != group->order()) {
    throw Error(ErrorKind::Config, "embedding must list one permutation per group element");
  }
  p.m = m;
  p.n = static_cast<int>(p.perm[0].size());
  p.torus = share(truncated_torus(m, p.n));
  p.kg = share(group_algebra(group));
  p.dual = share(dual_hopf(*p.kg));
  p.h1 = share(smash_product(permutation_action(p.kg, p.torus, m, p.n, p.perm)));
  p.h2 = share(cosemidirect_product(permutation_coaction(p.dual, p.torus, m, p.n, p.perm), group));
  p.subset = share(GroupSubset(group, subset));
  p.e_x = subset_idempotent(*p.h2, *p.subset);
  p.pairing = share(hopf_pairing(p.h1, p.h2, torus_pairing_table(*p.h1, *p.h2, m, p.n)));
  p.restricted = restrict_coaction(*p.h2, p.e_x);
  p.partial = pairing_action(*p.pairing, p.restricted.carrier, p.restricted.rho);
  p.gamma = share(gamma);
  p.twisted = cocycle_twist_smash(*p.partial, gamma, require_normalized);
  return p;
}

GlobalTwistedAction translation_action(GroupPtr group, HopfPtr group_alg, const GroupCocycleTable& gamma) {
  int n = group->order();
  std::vector<SparseVec> table(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g) table[g * n + g] = SparseVec::unit(g);
  SparseVec one = indicator([&] {
    std::vector<int> all(n);
    for (int g = 0; g < n; ++g) all[g] = g;
    return all;
  }(), n);
  auto b = std::make_shared<const StructuredAlgebra>(n, std::move(table), one, "κ^" + group->name());
  LinMap act({n, n}, n);
  LinMap u({n, n}, n);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      act.column(act.flat(g, h)) = SparseVec::unit(group->mul(g, h));
      u.column(u.flat(g, h)) = one.scaled(gamma(g, h));
    }
  }
  return {std::move(group_alg), std::move(b), std::move(act), std::move(u)};
}

SparseVec indicator(const std::vector<int>& members, int order) {
  Accumulator acc;
  for (int y : members) {
    if (y < 0 || y >= order) throw Error(ErrorKind::Config, "subset member out of range");
    acc.add(y, Scalar(1));
  }
  return acc.take();
}

AlgebraPtr diagonal_algebra(int d) {
  std::vector<SparseVec> table(static_cast<std::size_t>(d) * d);
  Accumulator one;
  for (int i = 0; i < d; ++i) {
    table[i * d + i] = SparseVec::unit(i);
    one.add(i, Scalar(1));
  }
  return std::make_shared<const StructuredAlgebra>(d, std::move(table), one.take(), "κ^" + std::to_string(d));
}

GroupTwistedPartialAction partial_swap(const SparseVec& w_aa) {
  GroupTwistedPartialAction p;
  p.group = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
  p.carrier = diagonal_algebra(3);
  SparseVec one = p.carrier->unit();
  SparseVec d_a = indicator({0, 1}, 3);
  p.idempotents = {one, d_a};
  p.alpha.push_back(ExactMatrix::identity(3));
  p.alpha.push_back(ExactMatrix::from_columns(3, {SparseVec::unit(1), SparseVec::unit(0), SparseVec()}));
  p.w = {one, d_a, d_a, w_aa};
  return p;
}

}  // namespace hp
