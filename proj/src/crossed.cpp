#include "hopfpartial/crossed.hpp"

#include <map>
#include <random>

#include "hopfpartial/error.hpp"

namespace hp {

CrossedProduct::CrossedProduct(TpaPtr tpa) : tpa_(std::move(tpa)) {
  const auto& A = tpa_->carrier();
  const auto& H = tpa_->hopf();
  int nh = H.dim();
  int amb = ambient_dim();
  SparseVec one = tensor_vec(A.unit(), H.unit(), nh);
  std::vector<SparseVec> cols(amb);
  for (int x = 0; x < amb; ++x) cols[x] = ambient_multiply(SparseVec::unit(x), one);
  pi_ = LinMap({amb}, ExactMatrix::from_columns(amb, std::move(cols)));
  for (int x = 0; x < amb; ++x) {
    if (pi_.apply(pi_.at(x)) != pi_.at(x)) {
      throw Error(ErrorKind::NormalizationFailure,
                  "π is not idempotent at ambient basis " + std::to_string(x) + " (a=" + std::to_string(x / nh) +
                      ", h=" + std::to_string(x % nh) + ")");
    }
  }
  std::vector<SparseVec> gens(pi_.matrix().columns());
  image_ = span(amb, gens);
  SparseVec unit = coords(pi_.apply(one));
  algebra_ = std::make_shared<const StructuredAlgebra>(
      image_.dim(),
      [this](int i, int j) { return coords(ambient_multiply(image_.basis()[i], image_.basis()[j])); }, unit,
      A.label() + "#" + H.name());
}

SparseVec CrossedProduct::ambient_product(int x, int y) const {
  const auto& A = tpa_->carrier();
  const auto& H = tpa_->hopf();
  int nh = H.dim();
  int a = x / nh;
  int h = x % nh;
  int b = y / nh;
  int l = y % nh;
  SparseVec ea = SparseVec::unit(a);
  Accumulator acc;
  for (const auto& s : H.sweedler(h, 3)) {
    SparseVec hb = A.multiply(ea, tpa_->act(s.idx[0], b));
    if (hb.is_zero()) continue;
    for (const auto& t : H.sweedler(l, 2)) {
      SparseVec v = A.multiply(hb, tpa_->omega(s.idx[1], t.idx[0]));
      if (v.is_zero()) continue;
      SparseVec hl = H.algebra().product(s.idx[2], t.idx[1]);
      Scalar c = s.coef * t.coef;
      for (const auto& va : v) {
        for (const auto& hh : hl) acc.add(va.index * nh + hh.index, c * va.value * hh.value);
      }
    }
  }
  return acc.take();
}

SparseVec CrossedProduct::ambient_multiply(const SparseVec& x, const SparseVec& y) const {
  Accumulator acc;
  for (const auto& p : x) {
    for (const auto& q : y) acc.add(ambient_product(p.index, q.index), p.value * q.value);
  }
  return acc.take();
}

SparseVec CrossedProduct::coords(const SparseVec& ambient) const {
  auto c = image_.coordinates(ambient);
  if (!c) throw Error(ErrorKind::ClosureFailure, "element " + ambient.to_string() + " lies outside A#H");
  return std::move(*c);
}

SparseVec CrossedProduct::element(const SparseVec& a, const SparseVec& h) const {
  return coords(pi_.apply(tensor_vec(a, h, tpa_->dim_h())));
}

SparseVec CrossedProduct::element(int a, int h) const { return coords(pi_.at(a * tpa_->dim_h() + h)); }

CrossedPtr build_crossed_product(TpaPtr tpa) { return std::make_shared<const CrossedProduct>(std::move(tpa)); }

Report verify_crossed_product(const CrossedProduct& cp) {
  Report r("crossed_product");
  const auto& t = cp.tpa();
  const auto& A = t.carrier();
  const auto& H = t.hopf();
  int nh = H.dim();
  int na = A.dim();
  int d = cp.dim();
  const auto& B = *cp.algebra();
  const auto& pi = cp.projector();
  r.info()["ambient_dim"] = cp.ambient_dim();
  r.info()["dim"] = d;
  r.add(check_all("crossed.projector_idempotent", "π∘π = π", {cp.ambient_dim()},
                  [&](const int* x) -> std::optional<std::string> {
                    if (pi.apply(pi.at(x[0])) != pi.at(x[0])) return "π(π(e)) differs from π(e)";
                    return std::nullopt;
                  }));
  r.add(check_all("crossed.unit", "(1#1)x = x(1#1) = x", {d}, [&](const int* x) -> std::optional<std::string> {
    SparseVec v = SparseVec::unit(x[0]);
    if (B.multiply(B.unit(), v) != v) return "left unit law fails";
    if (B.multiply(v, B.unit()) != v) return "right unit law fails";
    return std::nullopt;
  }));
  r.add(check_all("crossed.closure", "products of basis elements stay in (A⊗H)(1⊗1)", {d, d},
                  [&](const int* x) -> std::optional<std::string> {
                    SparseVec p = cp.ambient_multiply(cp.image().basis()[x[0]], cp.image().basis()[x[1]]);
                    if (!cp.image().contains(p)) return "product " + p.to_string() + " outside the image";
                    return std::nullopt;
                  }));
  r.add(check_identity(
      "crossed.element_absorbs_unit", "a#h = Σ a(h1·1) ⊗ h2", {na, nh},
      [&](const int* x) { return pi.at(x[0] * nh + x[1]); },
      [&](const int* x) {
        Accumulator acc;
        SparseVec a = SparseVec::unit(x[0]);
        for (const auto& s : H.sweedler(x[1], 2)) {
          acc.add(tensor_vec(A.multiply(a, t.unit_image(s.idx[0])), SparseVec::unit(s.idx[1]), nh), s.coef);
        }
        return acc.take();
      }));
  r.add(check_identity(
      "crossed.generator_product", "(1#h)(b#k) = Σ (h1·b)ω(h2,k1) # h3k2", {nh, na, nh},
      [&](const int* x) {
        SparseVec one_h = pi.apply(tensor_vec(A.unit(), SparseVec::unit(x[0]), nh));
        return cp.ambient_multiply(one_h, pi.at(x[1] * nh + x[2]));
      },
      [&](const int* x) {
        Accumulator acc;
        for (const auto& s : H.sweedler(x[0], 3)) {
          SparseVec hb = t.act(s.idx[0], x[1]);
          if (hb.is_zero()) continue;
          for (const auto& u : H.sweedler(x[2], 2)) {
            acc.add(tensor_vec(A.multiply(hb, t.omega(s.idx[1], u.idx[0])), H.algebra().product(s.idx[2], u.idx[1]), nh),
                    s.coef * u.coef);
          }
        }
        return pi.apply(acc.take());
      }));
  bool is_identity = pi.matrix() == ExactMatrix::identity(cp.ambient_dim());
  r.add(make_check("crossed.rank", "dim A#H ≤ dim A · dim H with equality iff π = id",
                   d <= cp.ambient_dim() && ((d == cp.ambient_dim()) == is_identity),
                   "rank " + std::to_string(d) + " of " + std::to_string(cp.ambient_dim())));
  return r;
}

Report verify_associativity(const CrossedProduct& cp, const AssociativityOptions& opt) {
  Report r("associativity");
  r.add(check_twisting(cp.tpa(), "associativity.criterion_twisting"));
  r.add(check_cocycle_law(cp.tpa(), "associativity.criterion_cocycle"));
  const auto& B = *cp.algebra();
  int d = cp.dim();
  auto assoc = [&](const int* x) -> std::optional<std::string> {
    SparseVec l = B.multiply(B.product(x[0], x[1]), SparseVec::unit(x[2]));
    SparseVec rr = B.multiply(SparseVec::unit(x[0]), B.product(x[1], x[2]));
    if (l == rr) return std::nullopt;
    return "(xy)z = " + l.to_string() + "; x(yz) = " + rr.to_string();
  };
  if (opt.mode == AssociativityMode::Sampled) {
    std::mt19937_64 rng(opt.seed);
    std::vector<std::vector<int>> triples(std::max(opt.samples, 0));
    for (auto& tr : triples) {
      tr.resize(3);
      for (int& v : tr) v = static_cast<int>(rng() % static_cast<std::uint64_t>(d));
    }
    r.add(check_list("associativity.sampled", "(xy)z = x(yz) on seeded basis triples", triples, assoc));
    r.info()["samples"] = opt.samples;
    r.info()["seed"] = opt.seed;
  } else if (opt.mode == AssociativityMode::Exhaustive) {
    if (d > opt.exhaustive_limit) {
      r.add(skipped_check("associativity.exhaustive", "(xy)z = x(yz) on all basis triples",
                          "dimension " + std::to_string(d) + " exceeds the exhaustive limit " +
                              std::to_string(opt.exhaustive_limit)));
    } else {
      r.add(check_all("associativity.exhaustive", "(xy)z = x(yz) on all basis triples", {d, d, d}, assoc));
    }
  }
  return r;
}

// ---------------------------------------------------------------- comodule structure

ComoduleAlgebra comodule_structure(const CrossedProduct& cp) {
  const auto& H = cp.tpa().hopf();
  int nh = H.dim();
  int d = cp.dim();
  std::vector<SparseVec> cols(d);
  for (int i = 0; i < d; ++i) {
    std::map<int, Accumulator> legs;
    for (const auto& e : cp.image().basis()[i]) {
      int a = e.index / nh;
      for (const auto& term : H.coalgebra().delta(e.index % nh)) {
        legs[term.right].add(a * nh + term.left, e.value * term.coef);
      }
    }
    Accumulator out;
    for (auto& [h2, acc] : legs) {
      SparseVec c = cp.coords(acc.take());
      for (const auto& x : c) out.add(x.index * nh + h2, x.value);
    }
    cols[i] = out.take();
  }
  return {cp.algebra(), cp.tpa().hopf_ptr(), LinMap({d}, ExactMatrix::from_columns(d * nh, std::move(cols)))};
}

Report verify_comodule_algebra(const ComoduleAlgebra& ca) {
  Report r("comodule_algebra");
  const auto& B = *ca.carrier;
  const auto& H = *ca.hopf;
  int nb = B.dim();
  int nh = H.dim();
  const LinMap& rho = ca.rho;
  r.add(check_identity(
      "comodule.coassociative", "(ρ⊗id)ρ = (id⊗Δ)ρ", {nb},
      [&](const int* x) {
        Accumulator acc;
        for (const auto& e : rho.at(x[0])) {
          for (const auto& f : rho.at(e.index / nh)) acc.add(f.index * nh + e.index % nh, e.value * f.value);
        }
        return acc.take();
      },
      [&](const int* x) {
        Accumulator acc;
        for (const auto& e : rho.at(x[0])) {
          int b = e.index / nh;
          for (const auto& term : H.coalgebra().delta(e.index % nh)) {
            acc.add((b * nh + term.left) * nh + term.right, e.value * term.coef);
          }
        }
        return acc.take();
      }));
  r.add(check_identity(
      "comodule.counit", "(id⊗ε)ρ = id", {nb},
      [&](const int* x) {
        Accumulator acc;
        for (const auto& e : rho.at(x[0])) acc.add(e.index / nh, e.value * H.coalgebra().epsilon(e.index % nh));
        return acc.take();
      },
      [&](const int* x) { return SparseVec::unit(x[0]); }));
  r.add(check_all("comodule.unit", "ρ(1) = 1⊗1", {}, [&](const int*) -> std::optional<std::string> {
    if (rho.apply(B.unit()) != tensor_vec(B.unit(), H.unit(), nh)) return "ρ(1) = " + rho.apply(B.unit()).to_string();
    return std::nullopt;
  }));
  r.add(check_identity(
      "comodule.multiplicative", "ρ(xy) = ρ(x)ρ(y)", {nb, nb}, [&](const int* x) { return rho.apply(B.product(x[0], x[1])); },
      [&](const int* x) {
        Accumulator acc;
        for (const auto& e : rho.at(x[0])) {
          for (const auto& f : rho.at(x[1])) {
            SparseVec bb = B.product(e.index / nh, f.index / nh);
            if (bb.is_zero()) continue;
            SparseVec hh = H.algebra().product(e.index % nh, f.index % nh);
            acc.add(tensor_vec(bb, hh, nh), e.value * f.value);
          }
        }
        return acc.take();
      }));
  return r;
}

Subspace coinvariants(const ComoduleAlgebra& ca) {
  int nb = ca.carrier->dim();
  int nh = ca.hopf->dim();
  std::vector<SparseVec> cols(nb);
  for (int b = 0; b < nb; ++b) cols[b] = ca.rho.at(b) - tensor_vec(SparseVec::unit(b), ca.hopf->unit(), nh);
  return span(nb, kernel(ExactMatrix::from_columns(nb * nh, std::move(cols))));
}

CheckResult check_subalgebra(const std::string& id, const StructuredAlgebra& b, const Subspace& s) {
  int n = s.dim();
  return check_all(id, "unital subalgebra", {n + 1}, [&](const int* x) -> std::optional<std::string> {
    if (x[0] == n) {
      if (!s.contains(b.unit())) return "unit outside the subspace";
      return std::nullopt;
    }
    for (int j = 0; j < n; ++j) {
      if (!s.contains(b.multiply(s.basis()[x[0]], s.basis()[j]))) {
        return "product with basis element " + std::to_string(j) + " leaves the subspace";
      }
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------- corner embedding

Report verify_corner_embedding(const GlobalTwistedAction& global, const InducedAction& induced) {
  Report r("corner");
  r.append(verify_global_cocycle(global), "corner.");
  auto global_tpa = std::make_shared<const TwistedPartialAction>(global.hopf, global.carrier, global.action, global.cocycle);
  CrossedProduct big(global_tpa);
  CrossedProduct small(induced.tpa);
  const auto& H = *global.hopf;
  int nh = H.dim();
  int nb = global.carrier->dim();
  const Subspace& img = induced.image;
  auto iota = [&](const SparseVec& amb) {
    Accumulator acc;
    for (const auto& e : amb) {
      for (const auto& b : img.basis()[e.index / nh]) acc.add(b.index * nh + e.index % nh, e.value * b.value);
    }
    return acc.take();
  };
  SparseVec corner = big.element(induced.idempotent, H.unit());
  const auto& BH = *big.algebra();
  r.add(make_check("corner.idempotent", "(1_A#1)² = 1_A#1 in B#H", BH.multiply(corner, corner) == corner, ""));
  std::vector<SparseVec> left, a_tensor_h, two_sided, image_of_small;
  for (int x = 0; x < big.dim(); ++x) {
    SparseVec v = SparseVec::unit(x);
    SparseVec ev = BH.multiply(corner, v);
    left.push_back(big.embed(ev));
    two_sided.push_back(big.embed(BH.multiply(ev, corner)));
  }
  for (int a = 0; a < img.dim(); ++a) {
    for (int h = 0; h < nh; ++h) a_tensor_h.push_back(iota(SparseVec::unit(a * nh + h)));
  }
  for (const auto& v : small.image().basis()) image_of_small.push_back(iota(v));
  int amb = nb * nh;
  r.add(make_check("corner.left_ideal", "(1_A#1)(B#H) = A⊗H", span(amb, left) == span(amb, a_tensor_h), ""));
  r.add(make_check("corner.equality", "(1_A#1)(B#H)(1_A#1) = A#H", span(amb, two_sided) == span(amb, image_of_small),
                   ""));
  r.add(check_identity(
      "corner.products", "inclusion A#H → B#H is multiplicative", {small.dim(), small.dim()},
      [&](const int* x) { return iota(small.ambient_multiply(small.image().basis()[x[0]], small.image().basis()[x[1]])); },
      [&](const int* x) { return big.ambient_multiply(image_of_small[x[0]], image_of_small[x[1]]); }));
  return r;
}

}  // namespace hp
