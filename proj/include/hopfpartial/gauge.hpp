#pragma once

#include <functional>

#include "hopfpartial/crossed.hpp"

namespace hp {

// u, v: H → A relating (·, ω) on source to (•, σ) on target.
struct GaugePair {
  TpaPtr source;
  TpaPtr target;
  LinMap u;
  LinMap v;
};

// u*v = h·1, both absorptions of u, h•a and σ(h,k) in terms of (u, v, ·, ω),
// u(1) = v(1) = 1 and v*u = h•1.
Report verify_gauge(const GaugePair& gp);

// h•a = Σv(h1)(h2·a)u(h3), σ(h,k) = Σv(h1)(h2·v(k1))ω(h3,k2)u(h4k3).
TpaPtr build_gauge_target(const TwistedPartialAction& source, const LinMap& u, const LinMap& v);

// u(l⊗u_g) = λ(g)((l⊗u_g)·1), v with λ(g)⁻¹; lambda is indexed by the group of
// a smash-shaped H. Throws NotSmashShape.
GaugePair character_gauge(TpaPtr source, const std::vector<Scalar>& lambda);

// Φ(a#h) = Σ a u(h1) # h2 in crossed-product coordinates, or Ψ with v when
// inverse is set. Throws ClosureFailure.
ExactMatrix gauge_map(const GaugePair& gp, const CrossedProduct& source, const CrossedProduct& target, bool inverse);

// Φ unital, multiplicative, left A-linear, colinear, and Ψ its inverse.
Report gauge_isomorphism(const GaugePair& gp, const CrossedProduct& source, const CrossedProduct& target);

// Recovers (u, v) from an isomorphism of crossed products given as a matrix in
// their coordinates. Throws NotAlgebraMap, NotInvertible, NotALinear, NotColinear.
GaugePair extract_gauge(const CrossedProduct& source, const CrossedProduct& target, const ExactMatrix& iso);

}  // namespace hp
