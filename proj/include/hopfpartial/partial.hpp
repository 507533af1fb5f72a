#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfpartial/algebra.hpp"
#include "hopfpartial/constructors.hpp"
#include "hopfpartial/groups.hpp"

namespace hp {

// Partial action h·a of H on A (LinMap H⊗A→A) with cocycle ω (LinMap H⊗H→A)
// and, once computed, its inverse ω' in the ideal <f1*f2>.
class TwistedPartialAction {
 public:
  TwistedPartialAction(HopfPtr hopf, AlgebraPtr carrier, LinMap action, LinMap cocycle,
                       std::optional<LinMap> inverse = std::nullopt);

  const HopfAlgebraData& hopf() const { return *hopf_; }
  const HopfPtr& hopf_ptr() const { return hopf_; }
  const StructuredAlgebra& carrier() const { return *carrier_; }
  const AlgebraPtr& carrier_ptr() const { return carrier_; }
  const LinMap& action() const { return action_; }
  const LinMap& cocycle() const { return cocycle_; }
  const std::optional<LinMap>& inverse_cocycle() const { return inverse_; }
  int dim_h() const { return hopf_->dim(); }
  int dim_a() const { return carrier_->dim(); }

  const SparseVec& act(int h, int a) const { return action_.at(h, a); }
  SparseVec act(int h, const SparseVec& a) const { return action_.apply(h, a); }
  SparseVec act(const SparseVec& h, const SparseVec& a) const;
  // h·1_A
  const SparseVec& unit_image(int h) const { return unit_image_[h]; }
  SparseVec unit_image(const SparseVec& h) const;
  const SparseVec& omega(int h, int k) const { return cocycle_.at(h, k); }
  SparseVec omega(const SparseVec& h, const SparseVec& k) const;
  const SparseVec& omega_prime(int h, int k) const { return inverse_->at(h, k); }
  SparseVec omega_prime(const SparseVec& h, const SparseVec& k) const;

  TwistedPartialAction with_inverse(LinMap inverse) const;

 private:
  HopfPtr hopf_;
  AlgebraPtr carrier_;
  LinMap action_;
  LinMap cocycle_;
  std::optional<LinMap> inverse_;
  std::vector<SparseVec> unit_image_;
};

using TpaPtr = std::shared_ptr<const TwistedPartialAction>;

// Trivial cocycle ω(h,l) = h·(l·1) of a partial action without twist.
LinMap trivial_cocycle(const HopfAlgebraData& h, const StructuredAlgebra& a, const LinMap& action);

// Laws of a twisted partial action plus the two derived absorption identities
// and e*e = e for e(h) = h·1.
Report verify_twisted_partial(const TwistedPartialAction& tpa);
// Only the two partial-action laws (unit and multiplicativity).
Report verify_partial_action(const HopfAlgebraData& h, const StructuredAlgebra& a, const LinMap& action);
// Σ(h1·(l1·a))ω(h2,l2) = Σω(h1,l1)(h2l2·a) on all (h, l, a).
CheckResult check_twisting(const TwistedPartialAction& tpa, const std::string& id = "twisted.twisting");
// Σ(h1·ω(l1,m1))ω(h2,l2m2) = Σω(h1,l1)ω(h2l2,m) on all (h, l, m).
CheckResult check_cocycle_law(const TwistedPartialAction& tpa, const std::string& id = "cocycle.cocycle_law");

enum class CocycleKind { Trivial, NormalizedCocycle, General };
std::string cocycle_kind_name(CocycleKind k);

struct CocycleClassification {
  CocycleKind kind = CocycleKind::General;
  bool trivial = false;
  bool normalized_cocycle = false;
  Report report;  // normalization and cocycle-law checks
};

CocycleClassification classify_cocycle(const TwistedPartialAction& tpa);
// Classification plus a check that the kind equals the expected one.
CocycleClassification classify_cocycle(const TwistedPartialAction& tpa, CocycleKind expected);

// Global action ▷ of H on B twisted by u: H⊗H→B.
struct GlobalTwistedAction {
  HopfPtr hopf;
  AlgebraPtr carrier;
  LinMap action;
  LinMap cocycle;
};

Report verify_global(const GlobalTwistedAction& g);
// Normalized cocycle law for u: Σ(h1▷u(k1,l1))u(h2,k2l2) = Σu(h1,k1)u(h2k2,l), u(h,1)=u(1,h)=ε(h)1.
Report verify_global_cocycle(const GlobalTwistedAction& g);

struct InducedAction {
  TpaPtr tpa;
  Subspace image;  // A = idem·B inside B
  SparseVec idempotent;
};

InducedAction induce_partial(const GlobalTwistedAction& g, const SparseVec& idem);
// Structure constants of the subalgebra spanned by a multiplicatively closed subspace.
AlgebraPtr subalgebra(const StructuredAlgebra& b, const Subspace& s, const SparseVec& unit, const std::string& label);

// Restriction of Δ_H to the ideal A = e·H: ρ = (e·⊗id)Δ, ρ: A→A⊗H with target index a*dim H + h.
struct RestrictedCoaction {
  AlgebraPtr carrier;
  Subspace image;
  LinMap rho;
};

RestrictedCoaction restrict_coaction(const HopfAlgebraData& h, const SparseVec& e);

// h·a = Σ a^[0] <h, a^[1]>; the result carries the trivial cocycle.
TpaPtr pairing_action(const HopfPairing& pairing, AlgebraPtr carrier, const LinMap& rho, bool verify = true);

// ω(l⊗u_g, l'⊗u_s) = γ(g,s) (l⊗u_g)·((l'⊗u_s)·1).
TpaPtr cocycle_twist_smash(const TwistedPartialAction& pa, const GroupCocycleTable& gamma,
                           bool require_normalized = true);

// Convolution elements on H⊗H with values in A.
CoalgebraPtr pair_coalgebra(const HopfAlgebraData& h);
ConvolutionElement f1_map(const TwistedPartialAction& tpa, CoalgebraPtr hh);
ConvolutionElement f2_map(const TwistedPartialAction& tpa, CoalgebraPtr hh);
ConvolutionElement cocycle_map(const LinMap& m, const TwistedPartialAction& tpa, CoalgebraPtr hh);
ConvolutionElement unit_image_map(const TwistedPartialAction& tpa);

struct SymmetryResult {
  Report report;
  TpaPtr tpa;  // input with ω' attached when the solver succeeded
};

// cocycle_report, when given, is reused for the (8)+(9) clause.
SymmetryResult verify_symmetric(TpaPtr tpa, const Report* cocycle_report = nullptr);

// Group-indexed data (1_g, α_g, w_{g,h}) of a twisted partial group action with
// ideals generated by central idempotents. alpha[g] is stored on all of A as a ↦ α_g(a 1_{g⁻¹}).
struct GroupTwistedPartialAction {
  GroupPtr group;
  AlgebraPtr carrier;
  std::vector<SparseVec> idempotents;
  std::vector<ExactMatrix> alpha;
  std::vector<SparseVec> w;  // index g*|G| + h
};

Report verify_group_partial(const GroupTwistedPartialAction& gpa);
// Requires group_alg to be the group algebra of gpa.group.
TpaPtr group_dictionary(const GroupTwistedPartialAction& gpa, HopfPtr group_alg);
GroupTwistedPartialAction group_dictionary_inverse(const TwistedPartialAction& tpa);

}  // namespace hp
