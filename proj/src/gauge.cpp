#include "hopfpartial/gauge.hpp"

#include "hopfpartial/error.hpp"

namespace hp {

namespace {

std::string witness_text(const CheckResult& c) {
  std::string s = c.id;
  if (!c.witnesses.empty()) s += " at " + Json(c.witnesses[0].tuple).dump() + ": " + c.witnesses[0].detail;
  return s;
}

LinMap convolve(const TwistedPartialAction& t, const LinMap& f, const LinMap& g) {
  const auto& H = t.hopf();
  return convolution(ConvolutionElement{H.coalgebra_ptr(), t.carrier_ptr(), f},
                     ConvolutionElement{H.coalgebra_ptr(), t.carrier_ptr(), g})
      .map;
}

// Σ v(h1)(h2·a)u(h3)
SparseVec gauge_action(const TwistedPartialAction& s, const LinMap& u, const LinMap& v, int h, const SparseVec& a) {
  const auto& A = s.carrier();
  Accumulator acc;
  for (const auto& t : s.hopf().sweedler(h, 3)) {
    const SparseVec& vh = v.at(t.idx[0]);
    if (vh.is_zero()) continue;
    SparseVec x = A.multiply(vh, s.act(t.idx[1], a));
    if (x.is_zero()) continue;
    acc.add(A.multiply(x, u.at(t.idx[2])), t.coef);
  }
  return acc.take();
}

// Σ v(h1)(h2·v(k1))ω(h3,k2)u(h4k3)
SparseVec gauge_cocycle(const TwistedPartialAction& s, const LinMap& u, const LinMap& v, int h, int k) {
  const auto& A = s.carrier();
  const auto& H = s.hopf();
  Accumulator acc;
  for (const auto& t : H.sweedler(h, 4)) {
    const SparseVec& vh = v.at(t.idx[0]);
    if (vh.is_zero()) continue;
    for (const auto& w : H.sweedler(k, 3)) {
      SparseVec x = A.multiply(vh, s.act(t.idx[1], v.at(w.idx[0])));
      if (x.is_zero()) continue;
      x = A.multiply(x, s.omega(t.idx[2], w.idx[1]));
      if (x.is_zero()) continue;
      acc.add(A.multiply(x, u.apply(H.algebra().product(t.idx[3], w.idx[2]))), t.coef * w.coef);
    }
  }
  return acc.take();
}

// (I⊗ε) on an ambient A⊗H vector.
SparseVec counit_leg(const SparseVec& ambient, const HopfAlgebraData& H) {
  int nh = H.dim();
  Accumulator acc;
  for (const auto& e : ambient) {
    Scalar c = H.coalgebra().epsilon(e.index % nh);
    if (!c.is_zero()) acc.add(e.index / nh, e.value * c);
  }
  return acc.take();
}

ExactMatrix apply_all(const ExactMatrix& m, const std::vector<SparseVec>& xs, int rows) {
  std::vector<SparseVec> cols;
  cols.reserve(xs.size());
  for (const auto& x : xs) cols.push_back(m.apply(x));
  return ExactMatrix::from_columns(rows, std::move(cols));
}

}  // namespace

Report verify_gauge(const GaugePair& gp) {
  Report r("gauge");
  const auto& S = *gp.source;
  const auto& T = *gp.target;
  const auto& H = S.hopf();
  const auto& A = S.carrier();
  int nh = H.dim();
  int na = A.dim();
  LinMap uv = convolve(S, gp.u, gp.v);
  r.add(check_identity(
      "gauge.convolution_unit", "u*v(h) = h·1", {nh}, [&](const int* x) { return uv.at(x[0]); },
      [&](const int* x) { return S.unit_image(x[0]); }));
  r.add(check_all("gauge.absorbs_unit", "u(h) = Σu(h1)(h2·1) = Σ(h1·1)u(h2)", {nh},
                  [&](const int* x) -> std::optional<std::string> {
                    Accumulator right, left;
                    for (const auto& d : H.coalgebra().delta(x[0])) {
                      right.add(A.multiply(gp.u.at(d.left), S.unit_image(d.right)), d.coef);
                      left.add(A.multiply(S.unit_image(d.left), gp.u.at(d.right)), d.coef);
                    }
                    const SparseVec& u = gp.u.at(x[0]);
                    if (right.take() != u) return std::string("right absorption fails");
                    if (left.take() != u) return std::string("left absorption fails");
                    return std::nullopt;
                  }));
  r.add(check_identity(
      "gauge.action", "h•a = Σv(h1)(h2·a)u(h3)", {nh, na}, [&](const int* x) { return T.act(x[0], x[1]); },
      [&](const int* x) { return gauge_action(S, gp.u, gp.v, x[0], SparseVec::unit(x[1])); }));
  r.add(check_identity(
      "gauge.cocycle", "σ(h,k) = Σv(h1)(h2·v(k1))ω(h3,k2)u(h4k3)", {nh, nh},
      [&](const int* x) { return T.omega(x[0], x[1]); },
      [&](const int* x) { return gauge_cocycle(S, gp.u, gp.v, x[0], x[1]); }));
  r.add(check_all("gauge.unital", "u(1) = v(1) = 1", {}, [&](const int*) -> std::optional<std::string> {
    if (gp.u.apply(H.unit()) != A.unit()) return std::string("u(1) = ") + gp.u.apply(H.unit()).to_string();
    if (gp.v.apply(H.unit()) != A.unit()) return std::string("v(1) = ") + gp.v.apply(H.unit()).to_string();
    return std::nullopt;
  }));
  LinMap vu = convolve(S, gp.v, gp.u);
  r.add(check_identity(
      "gauge.reverse_unit", "v*u(h) = h•1", {nh}, [&](const int* x) { return vu.at(x[0]); },
      [&](const int* x) { return T.unit_image(x[0]); }));
  return r;
}

TpaPtr build_gauge_target(const TwistedPartialAction& source, const LinMap& u, const LinMap& v) {
  int nh = source.dim_h();
  int na = source.dim_a();
  LinMap action({nh, na}, na);
  LinMap sigma({nh, nh}, na);
  for (int h = 0; h < nh; ++h) {
    for (int a = 0; a < na; ++a) action.column(action.flat(h, a)) = gauge_action(source, u, v, h, SparseVec::unit(a));
    for (int k = 0; k < nh; ++k) sigma.column(sigma.flat(h, k)) = gauge_cocycle(source, u, v, h, k);
  }
  return std::make_shared<const TwistedPartialAction>(source.hopf_ptr(), source.carrier_ptr(), std::move(action),
                                                      std::move(sigma));
}

GaugePair character_gauge(TpaPtr source, const std::vector<Scalar>& lambda) {
  const auto& H = source->hopf();
  if (!H.smash || static_cast<int>(lambda.size()) != H.smash->inner_dim) {
    throw Error(ErrorKind::NotSmashShape, "character gauge needs H = L⋊κG with one value per group element");
  }
  int nh = H.dim();
  int na = source->dim_a();
  LinMap u({nh}, na), v({nh}, na);
  for (int h = 0; h < nh; ++h) {
    const Scalar& l = lambda[H.smash->group_element(h)];
    u.column(h) = source->unit_image(h).scaled(l);
    v.column(h) = source->unit_image(h).scaled(l.inverse());
  }
  TpaPtr target = build_gauge_target(*source, u, v);
  return {std::move(source), std::move(target), std::move(u), std::move(v)};
}

ExactMatrix gauge_map(const GaugePair& gp, const CrossedProduct& source, const CrossedProduct& target, bool inverse) {
  const CrossedProduct& from = inverse ? target : source;
  const CrossedProduct& to = inverse ? source : target;
  const LinMap& m = inverse ? gp.v : gp.u;
  const auto& H = from.tpa().hopf();
  const auto& A = from.tpa().carrier();
  int nh = H.dim();
  std::vector<SparseVec> cols(from.dim());
  for (int x = 0; x < from.dim(); ++x) {
    Accumulator acc;
    for (const auto& e : from.image().basis()[x]) {
      SparseVec a = SparseVec::unit(e.index / nh);
      for (const auto& d : H.coalgebra().delta(e.index % nh)) {
        acc.add(tensor_vec(A.multiply(a, m.at(d.left)), SparseVec::unit(d.right), nh), e.value * d.coef);
      }
    }
    cols[x] = to.coords(acc.take());
  }
  return ExactMatrix::from_columns(to.dim(), std::move(cols));
}

Report gauge_isomorphism(const GaugePair& gp, const CrossedProduct& source, const CrossedProduct& target) {
  Report r("gauge_isomorphism");
  const std::vector<std::pair<std::string, std::string>> ids = {
      {"gauge_iso.unital", "Φ(1#1) = 1#1"},
      {"gauge_iso.multiplicative", "Φ(xy) = Φ(x)Φ(y)"},
      {"gauge_iso.left_linear", "Φ((a#1)x) = (a#1)Φ(x)"},
      {"gauge_iso.colinear", "ρ∘Φ = (Φ⊗id)ρ"},
      {"gauge_iso.psi_phi", "Ψ∘Φ = id"},
      {"gauge_iso.phi_psi", "Φ∘Ψ = id"},
  };
  ExactMatrix phi, psi;
  try {
    phi = gauge_map(gp, source, target, false);
    psi = gauge_map(gp, source, target, true);
  } catch (const Error& e) {
    for (const auto& [id, desc] : ids) r.add(make_check(id, desc, false, e.what()));
    return r;
  }
  const auto& Rs = *source.algebra();
  const auto& Rt = *target.algebra();
  const auto& H = source.tpa().hopf();
  int nh = H.dim();
  int na = source.tpa().dim_a();
  int ds = source.dim();
  int dt = target.dim();
  r.add(make_check(ids[0].first, ids[0].second, phi.apply(Rs.unit()) == Rt.unit()));
  r.add(check_identity(
      ids[1].first, ids[1].second, {ds, ds}, [&](const int* x) { return phi.apply(Rs.product(x[0], x[1])); },
      [&](const int* x) { return Rt.multiply(phi.column(x[0]), phi.column(x[1])); }));
  r.add(check_identity(
      ids[2].first, ids[2].second, {na, ds},
      [&](const int* x) { return phi.apply(Rs.multiply(source.element(SparseVec::unit(x[0]), H.unit()), SparseVec::unit(x[1]))); },
      [&](const int* x) { return Rt.multiply(target.element(SparseVec::unit(x[0]), H.unit()), phi.column(x[1])); }));
  ComoduleAlgebra cs = comodule_structure(source);
  ComoduleAlgebra ct = comodule_structure(target);
  r.add(check_identity(
      ids[3].first, ids[3].second, {ds}, [&](const int* x) { return ct.rho.apply(phi.column(x[0])); },
      [&](const int* x) {
        Accumulator acc;
        for (const auto& e : cs.rho.at(x[0])) acc.add(tensor_vec(phi.column(e.index / nh), SparseVec::unit(e.index % nh), nh), e.value);
        return acc.take();
      }));
  r.add(check_identity(
      ids[4].first, ids[4].second, {ds}, [&](const int* x) { return psi.apply(phi.column(x[0])); },
      [&](const int* x) { return SparseVec::unit(x[0]); }));
  r.add(check_identity(
      ids[5].first, ids[5].second, {dt}, [&](const int* x) { return phi.apply(psi.column(x[0])); },
      [&](const int* x) { return SparseVec::unit(x[0]); }));
  return r;
}

GaugePair extract_gauge(const CrossedProduct& source, const CrossedProduct& target, const ExactMatrix& iso) {
  const auto& Rs = *source.algebra();
  const auto& Rt = *target.algebra();
  const auto& H = source.tpa().hopf();
  int nh = H.dim();
  int na = source.tpa().dim_a();
  int ds = source.dim();
  int dt = target.dim();
  if (iso.rows() != dt || iso.cols() != ds) throw Error(ErrorKind::ShapeMismatch, "isomorphism has the wrong shape");
  if (iso.apply(Rs.unit()) != Rt.unit()) throw Error(ErrorKind::NotAlgebraMap, "Φ(1) ≠ 1");
  CheckResult mult = check_identity(
      "iso.multiplicative", "Φ(xy) = Φ(x)Φ(y)", {ds, ds}, [&](const int* x) { return iso.apply(Rs.product(x[0], x[1])); },
      [&](const int* x) { return Rt.multiply(iso.column(x[0]), iso.column(x[1])); });
  if (!mult.passed()) throw Error(ErrorKind::NotAlgebraMap, witness_text(mult));

  std::vector<SparseVec> ones(nh);
  for (int h = 0; h < nh; ++h) ones[h] = target.element(source.tpa().carrier().unit(), SparseVec::unit(h));
  ExactMatrix pre;
  try {
    if (ds != dt) throw Error(ErrorKind::NotInvertible, "dimensions differ");
    SolveResult sol = solve_linear(iso, ExactMatrix::from_columns(dt, ones));
    if (!sol.kernel_basis.empty()) throw Error(ErrorKind::NotInvertible, "Φ has a kernel");
    pre = std::move(sol.solution);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotInvertible) throw;
    throw Error(ErrorKind::NotInvertible, e.what());
  }

  CheckResult lin = check_identity(
      "iso.left_linear", "Φ((a#1)x) = (a#1)Φ(x)", {na, ds},
      [&](const int* x) { return iso.apply(Rs.multiply(source.element(SparseVec::unit(x[0]), H.unit()), SparseVec::unit(x[1]))); },
      [&](const int* x) { return Rt.multiply(target.element(SparseVec::unit(x[0]), H.unit()), iso.column(x[1])); });
  if (!lin.passed()) throw Error(ErrorKind::NotALinear, witness_text(lin));

  ComoduleAlgebra cs = comodule_structure(source);
  ComoduleAlgebra ct = comodule_structure(target);
  CheckResult col = check_identity(
      "iso.colinear", "ρ∘Φ = (Φ⊗id)ρ", {ds}, [&](const int* x) { return ct.rho.apply(iso.column(x[0])); },
      [&](const int* x) {
        Accumulator acc;
        for (const auto& e : cs.rho.at(x[0])) acc.add(tensor_vec(iso.column(e.index / nh), SparseVec::unit(e.index % nh), nh), e.value);
        return acc.take();
      });
  if (!col.passed()) throw Error(ErrorKind::NotColinear, witness_text(col));

  std::vector<SparseVec> sources(nh);
  for (int h = 0; h < nh; ++h) sources[h] = source.element(source.tpa().carrier().unit(), SparseVec::unit(h));
  ExactMatrix images = apply_all(iso, sources, dt);
  LinMap u({nh}, na), v({nh}, na);
  for (int h = 0; h < nh; ++h) {
    u.column(h) = counit_leg(target.embed(images.column(h)), H);
    v.column(h) = counit_leg(source.embed(pre.column(h)), H);
  }
  return {source.tpa_ptr(), target.tpa_ptr(), std::move(u), std::move(v)};
}

}  // namespace hp
