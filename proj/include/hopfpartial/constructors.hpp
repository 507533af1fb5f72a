#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfpartial/algebra.hpp"
#include "hopfpartial/groups.hpp"

namespace hp {

// Basis u_g in group order; carries a SmashLayout with a 1-dimensional outer factor.
HopfAlgebraData group_algebra(GroupPtr g);

// (kC_m)^{⊗n} with basis x^k = x_1^{k_1}...x_n^{k_n}, index sum k_i m^{n-1-i}.
HopfAlgebraData truncated_torus(int m, int n, const std::string& symbol = "t");
std::vector<int> torus_exponents(int index, int m, int n);
int torus_index(const std::vector<int>& k, int m);

// Left action of a Hopf algebra K on an algebra L.
struct ModuleAlgebraAction {
  HopfPtr acting;
  HopfPtr carrier;
  LinMap action;  // K ⊗ L -> L
};

// G acts on (kC_m)^{⊗n} through permutations perm[g] of the n tensor positions:
// the exponent at position i moves to position perm[g][i].
ModuleAlgebraAction permutation_action(HopfPtr group_alg, HopfPtr torus, int m, int n,
                                       const std::vector<std::vector<int>>& perm);
Report check_module_algebra(const ModuleAlgebraAction& act);
CheckResult check_cocommutative(const HopfAlgebraData& h, const std::string& id = "hopf.cocommutative");

// L ⋊ K with basis l*dim K + k; product (l⊗k)(l'⊗k') = Σ l(k_(1)·l') ⊗ k_(2)k'.
HopfAlgebraData smash_product(const ModuleAlgebraAction& act);

// Left K-coaction δ: L -> K ⊗ L stored with target index k*dim L + l.
struct Coaction {
  HopfPtr coacting;
  HopfPtr carrier;
  LinMap delta;
};

// δ(t^k) = Σ_g p_g ⊗ t^{k∘g} with (k∘g)_j = k_{perm[g][j]}, over K = (kG)*.
Coaction permutation_coaction(HopfPtr dual_group, HopfPtr torus, int m, int n,
                              const std::vector<std::vector<int>>& perm);
Report check_comodule_coalgebra(const Coaction& c);

// L >◁ K with basis l*dim K + k, componentwise product and
// Δ(l⊗φ) = Σ (l_(1) ⊗ (l_(2))_[-1] φ_(1)) ⊗ ((l_(2))_[0] ⊗ φ_(2)).
HopfAlgebraData cosemidirect_product(const Coaction& c, GroupPtr group = nullptr);

// Bilinear form <h1, h2>; table(i, j) = <e_i, f_j> with rows indexing H1.
struct HopfPairing {
  HopfPtr h1;
  HopfPtr h2;
  ExactMatrix table;
  Scalar operator()(int i, int j) const { return table.at(i, j); }
};

Report check_pairing(const HopfPairing& p);
// Verifies every law; throws PairingLawViolation with the first witness.
HopfPairing hopf_pairing(HopfPtr h1, HopfPtr h2, ExactMatrix table);

// <χ^θ ⊗ u_g, t^k ⊗ p_s> = δ_{g,s} ζ_m^{Σ k_i θ_i} for the smash/cosemidirect pair.
ExactMatrix torus_pairing_table(const HopfAlgebraData& h1, const HopfAlgebraData& h2, int m, int n);

}  // namespace hp
