#pragma once

#include "hopfpartial/crossed.hpp"

namespace hp {

// Comodule algebra B with coinvariants A (recomputed from ρ) and the maps
// γ, γ': H → B.
struct CleftData {
  ComoduleAlgebra extension;
  Subspace coinvariants;
  AlgebraPtr coinvariant_algebra;
  LinMap gamma;
  LinMap gamma_prime;
};

CleftData make_cleft_data(ComoduleAlgebra extension, LinMap gamma, LinMap gamma_prime);

// γ(h) = 1#h, γ'(h) = Σ ω'(S(h2), h3) # S(h1). Throws NotSymmetric without ω'.
CleftData build_cleft_maps(const CrossedProduct& cp);
// γ*γ'(h) = (h·1)#1 and γ'*γ(h) = Σ(S(h2)·1)#S(h1)h3.
Report verify_cleft_construction(const CleftData& cd, const CrossedProduct& cp);

// Clauses (i)-(vii) plus the derived identities for γ, γ'.
Report verify_partially_cleft(const CleftData& cd);

// γ̄ = γ'*γ*γ'.
CleftData normalize_gamma_prime(const CleftData& cd);
Report verify_gamma_normalization(const CleftData& original, const CleftData& normalized);

// h·a = Σγ(h1)aγ'(h2), ω(h,k) = Σγ(h1)γ(k1)γ'(h2k2), ω'(h,k) = Σγ(h1k1)γ'(k2)γ'(h2)
// on A = B^{coH}. Throws ImageNotInCoinvariants.
TpaPtr reconstruct_action(const CleftData& cd);

// Compares a reconstruction with the action it came from under a ↦ a#1.
Report compare_reconstruction(const CrossedProduct& original, const CleftData& cd, const TwistedPartialAction& rebuilt);

// Φ(a#h) = aγ(h) from the crossed product of the reconstruction to B, and
// Ψ(b) = Σ b0γ'(b1)#b2.
Report cleft_isomorphism(const CleftData& cd, const CrossedProduct& rebuilt);

}  // namespace hp
