#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hopfpartial/partial.hpp"

namespace hp {

// A#H = (A⊗H)(1⊗1) realized as the image of π inside A⊗H (ambient index
// a*dim H + h). Elements of A#H are written in coordinates of the image basis.
class CrossedProduct {
 public:
  explicit CrossedProduct(TpaPtr tpa);
  CrossedProduct(const CrossedProduct&) = delete;
  CrossedProduct& operator=(const CrossedProduct&) = delete;

  const TwistedPartialAction& tpa() const { return *tpa_; }
  const TpaPtr& tpa_ptr() const { return tpa_; }
  int ambient_dim() const { return tpa_->dim_a() * tpa_->dim_h(); }
  int dim() const { return image_.dim(); }
  const Subspace& image() const { return image_; }
  const LinMap& projector() const { return pi_; }
  const AlgebraPtr& algebra() const { return algebra_; }

  // (a⊗h)(b⊗l) = Σ a(h1·b)ω(h2,l1) ⊗ h3l2 on ambient vectors.
  SparseVec ambient_product(int x, int y) const;
  SparseVec ambient_multiply(const SparseVec& x, const SparseVec& y) const;
  // Throws ClosureFailure when v is outside A#H.
  SparseVec coords(const SparseVec& ambient) const;
  SparseVec embed(const SparseVec& coords) const { return image_.embed(coords); }
  // a#h in coordinates.
  SparseVec element(const SparseVec& a, const SparseVec& h) const;
  SparseVec element(int a, int h) const;
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const { return algebra_->multiply(x, y); }

 private:
  TpaPtr tpa_;
  LinMap pi_;
  Subspace image_;
  AlgebraPtr algebra_;
};

using CrossedPtr = std::shared_ptr<const CrossedProduct>;

// Throws NormalizationFailure when π is not idempotent.
CrossedPtr build_crossed_product(TpaPtr tpa);

// π idempotent, unit, closure, both generator product formulas, rank bound.
Report verify_crossed_product(const CrossedProduct& cp);

enum class AssociativityMode { Criterion, Sampled, Exhaustive };
struct AssociativityOptions {
  AssociativityMode mode = AssociativityMode::Sampled;
  int samples = 10000;
  std::uint64_t seed = 0;
  int exhaustive_limit = 64;
};
Report verify_associativity(const CrossedProduct& cp, const AssociativityOptions& opt);

// Right H-comodule algebra; rho has target index b*dim H + h.
struct ComoduleAlgebra {
  AlgebraPtr carrier;
  HopfPtr hopf;
  LinMap rho;
};

// ρ(a#h) = Σ (a#h1) ⊗ h2.
ComoduleAlgebra comodule_structure(const CrossedProduct& cp);
Report verify_comodule_algebra(const ComoduleAlgebra& ca);
// Kernel of ρ - (· ⊗ 1_H) in the carrier's coordinates.
Subspace coinvariants(const ComoduleAlgebra& ca);
// Checks the coinvariants form a unital subalgebra.
CheckResult check_subalgebra(const std::string& id, const StructuredAlgebra& b, const Subspace& s);

// Corner (1_A#1)(B#_u H)(1_A#1) of the global crossed product against A#H.
Report verify_corner_embedding(const GlobalTwistedAction& global, const InducedAction& induced);

}  // namespace hp
