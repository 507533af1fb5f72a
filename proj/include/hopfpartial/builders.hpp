#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfpartial/constructors.hpp"
#include "hopfpartial/groups.hpp"
#include "hopfpartial/partial.hpp"

namespace hp {

// Smash/cosemidirect pair over (κC_m)^{⊗n}, the ideal A = e_X H2 with its
// restricted coaction, the pairing-derived partial action of H1 on A and its
// twist by a group cocycle.
struct PairingObjects {
  GroupPtr group;
  std::vector<std::vector<int>> perm;
  int m = 0;
  int n = 0;
  HopfPtr torus, kg, dual, h1, h2;
  std::shared_ptr<const GroupSubset> subset;
  SparseVec e_x;
  std::shared_ptr<const HopfPairing> pairing;
  RestrictedCoaction restricted;
  TpaPtr partial;
  std::shared_ptr<const GroupCocycleTable> gamma;
  TpaPtr twisted;
};

// perm defaults to the regular representation (then n = |G|).
PairingObjects build_pairing_objects(GroupPtr group, int m, std::vector<std::vector<int>> perm,
                                     const std::vector<int>& subset, const GroupCocycleTable& gamma,
                                     bool require_normalized = true);

// Σ_{s∈X} 1 ⊗ p_s in the cosemidirect product.
SparseVec subset_idempotent(const HopfAlgebraData& h2, const GroupSubset& x);

// Functions on G (basis p_g) with g▷p_h = p_{gh} and u(g,h) = γ(g,h)1.
GlobalTwistedAction translation_action(GroupPtr group, HopfPtr group_alg, const GroupCocycleTable& gamma);
// Σ_{y∈Y} p_y.
SparseVec indicator(const std::vector<int>& members, int order);

// Z/2 acting on κ³ (orthogonal idempotents e0, e1, e2) by swapping e0 and e1,
// with D_a = span(e0, e1) and w_{a,a} given; the other w are the unit of D_g D_{gh}.
GroupTwistedPartialAction partial_swap(const SparseVec& w_aa);
// Diagonal algebra κ^d with orthogonal idempotent basis.
AlgebraPtr diagonal_algebra(int d);

}  // namespace hp
