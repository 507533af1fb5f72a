#include "hopfpartial/cleft.hpp"

#include "hopfpartial/error.hpp"

namespace hp {

namespace {

ConvolutionElement conv_map(const CleftData& cd, const LinMap& m) {
  return {cd.extension.hopf->coalgebra_ptr(), cd.extension.carrier, m};
}

LinMap convolve(const CleftData& cd, const LinMap& f, const LinMap& g) {
  return convolution(conv_map(cd, f), conv_map(cd, g)).map;
}

SparseVec tensor_h(const SparseVec& b, const SparseVec& h, int nh) { return tensor_vec(b, h, nh); }

}  // namespace

CleftData make_cleft_data(ComoduleAlgebra extension, LinMap gamma, LinMap gamma_prime) {
  CleftData cd;
  cd.coinvariants = coinvariants(extension);
  const auto& B = *extension.carrier;
  auto unit = cd.coinvariants.coordinates(B.unit());
  if (!unit) throw Error(ErrorKind::ClosureFailure, "the unit is not coinvariant");
  cd.coinvariant_algebra = subalgebra(B, cd.coinvariants, *unit, B.label() + "^coH");
  cd.extension = std::move(extension);
  cd.gamma = std::move(gamma);
  cd.gamma_prime = std::move(gamma_prime);
  return cd;
}

CleftData build_cleft_maps(const CrossedProduct& cp) {
  const auto& t = cp.tpa();
  if (!t.inverse_cocycle()) throw Error(ErrorKind::NotSymmetric, "the twisted partial action carries no ω'");
  const auto& H = t.hopf();
  const auto& A = t.carrier();
  int nh = H.dim();
  int nb = cp.dim();
  std::vector<SparseVec> g(nh), gp(nh);
  for (int h = 0; h < nh; ++h) {
    g[h] = cp.element(A.unit(), SparseVec::unit(h));
    Accumulator acc;
    for (const auto& s : H.sweedler(h, 3)) {
      SparseVec w = t.omega_prime(H.S(s.idx[1]), SparseVec::unit(s.idx[2]));
      if (w.is_zero()) continue;
      acc.add(cp.element(w, H.S(s.idx[0])), s.coef);
    }
    gp[h] = acc.take();
  }
  return make_cleft_data(comodule_structure(cp), LinMap({nh}, ExactMatrix::from_columns(nb, std::move(g))),
                         LinMap({nh}, ExactMatrix::from_columns(nb, std::move(gp))));
}

Report verify_cleft_construction(const CleftData& cd, const CrossedProduct& cp) {
  Report r("cleft_construction");
  const auto& t = cp.tpa();
  const auto& H = t.hopf();
  int nh = H.dim();
  LinMap e = convolve(cd, cd.gamma, cd.gamma_prime);
  LinMap et = convolve(cd, cd.gamma_prime, cd.gamma);
  r.add(check_identity(
      "cleft.gamma_gamma_prime_value", "γ*γ'(h) = (h·1)#1", {nh}, [&](const int* x) { return e.at(x[0]); },
      [&](const int* x) { return cp.element(t.unit_image(x[0]), H.unit()); }));
  r.add(check_identity(
      "cleft.gamma_prime_gamma_value", "γ'*γ(h) = Σ(S(h2)·1)#S(h1)h3", {nh}, [&](const int* x) { return et.at(x[0]); },
      [&](const int* x) {
        Accumulator acc;
        for (const auto& s : H.sweedler(x[0], 3)) {
          SparseVec one = t.unit_image(H.S(s.idx[1]));
          if (one.is_zero()) continue;
          acc.add(cp.element(one, H.algebra().multiply(H.S(s.idx[0]), SparseVec::unit(s.idx[2]))), s.coef);
        }
        return acc.take();
      }));
  return r;
}

Report verify_partially_cleft(const CleftData& cd) {
  Report r("partially_cleft");
  const auto& H = *cd.extension.hopf;
  const auto& B = *cd.extension.carrier;
  const auto& Asub = cd.coinvariants;
  const LinMap& rho = cd.extension.rho;
  const LinMap& g = cd.gamma;
  const LinMap& gp = cd.gamma_prime;
  int nh = H.dim();
  int nb = B.dim();
  int na = Asub.dim();
  auto prod = [&](int i, int j) { return H.algebra().product(i, j); };
  auto sw = [&](int i, int legs) -> const std::vector<SweedlerTerm>& { return H.sweedler(i, legs); };
  LinMap e = convolve(cd, g, gp);
  LinMap et = convolve(cd, gp, g);

  r.add(check_all("cleft.gamma_unit", "γ(1) = 1", {}, [&](const int*) -> std::optional<std::string> {
    if (g.apply(H.unit()) != B.unit()) return "γ(1) = " + g.apply(H.unit()).to_string();
    return std::nullopt;
  }));
  r.add(check_identity(
      "cleft.gamma_colinear", "ρ∘γ = (γ⊗id)Δ", {nh}, [&](const int* x) { return rho.apply(g.at(x[0])); },
      [&](const int* x) {
        Accumulator acc;
        for (const auto& d : H.coalgebra().delta(x[0])) acc.add(tensor_h(g.at(d.left), SparseVec::unit(d.right), nh), d.coef);
        return acc.take();
      }));
  r.add(check_identity(
      "cleft.gamma_prime_colinear", "ρ∘γ' = (γ'⊗S)Δ^cop", {nh}, [&](const int* x) { return rho.apply(gp.at(x[0])); },
      [&](const int* x) {
        Accumulator acc;
        for (const auto& d : H.coalgebra().delta(x[0])) acc.add(tensor_h(gp.at(d.right), H.S(d.left), nh), d.coef);
        return acc.take();
      }));

  // e_h in A, centrality, ẽ_h commutes with A
  CheckResult in_a = check_all("cleft.e_in_coinvariants", "e_h = γ*γ'(h) lies in A", {nh},
                               [&](const int* x) -> std::optional<std::string> {
                                 if (!Asub.contains(e.at(x[0]))) return "e_h = " + e.at(x[0]).to_string();
                                 return std::nullopt;
                               });
  bool e_in_a = in_a.passed();
  r.add(std::move(in_a));
  auto e_in_a_coords = [&](const SparseVec& v) { return *Asub.coordinates(v); };
  if (e_in_a) {
    auto hh = pair_coalgebra(H);
    std::vector<SparseVec> cols(static_cast<std::size_t>(nh) * nh);
    for (int h = 0; h < nh; ++h) {
      for (int k = 0; k < nh; ++k) cols[h * nh + k] = e_in_a_coords(e.apply(prod(h, k)));
    }
    ConvolutionElement em{hh, cd.coinvariant_algebra, LinMap({nh * nh}, ExactMatrix::from_columns(na, std::move(cols)))};
    r.add(check_convolution_central("cleft.e_product_central", "(γ*γ')∘M central in Hom(H⊗H,A)", em));
  } else {
    r.add(skipped_check("cleft.e_product_central", "(γ*γ')∘M central in Hom(H⊗H,A)", "e_h is not in A"));
  }
  r.add(check_all("cleft.e_tilde_commutes", "ẽ_h = γ'*γ(h) commutes with A", {nh, na},
                  [&](const int* x) -> std::optional<std::string> {
                    const SparseVec& a = Asub.basis()[x[1]];
                    if (B.multiply(et.at(x[0]), a) != B.multiply(a, et.at(x[0]))) return "ẽ_h a differs from a ẽ_h";
                    return std::nullopt;
                  }));
  // b recovered from its coaction
  r.add(check_identity(
      "cleft.reconstruction", "Σ b0γ'(b1)γ(b2) = b", {nb},
      [&](const int* x) {
        Accumulator acc;
        for (const auto& en : rho.at(x[0])) {
          SparseVec b0 = SparseVec::unit(en.index / nh);
          for (const auto& d : H.coalgebra().delta(en.index % nh)) {
            acc.add(B.multiply(B.multiply(b0, gp.at(d.left)), g.at(d.right)), en.value * d.coef);
          }
        }
        return acc.take();
      },
      [&](const int* x) { return SparseVec::unit(x[0]); }));
  // (v)-(vii)
  r.add(check_identity(
      "cleft.e_exchange", "γ(h)e_k = Σ e_{h1k}γ(h2)", {nh, nh}, [&](const int* x) { return B.multiply(g.at(x[0]), e.at(x[1])); },
      [&](const int* x) {
        Accumulator acc;
        for (const auto& s : sw(x[0], 2)) acc.add(B.multiply(e.apply(prod(s.idx[0], x[1])), g.at(s.idx[1])), s.coef);
        return acc.take();
      }));
  r.add(check_identity(
      "cleft.e_tilde_exchange", "γ'(k)ẽ_h = Σ ẽ_{hk1}γ'(k2)", {nh, nh},
      [&](const int* x) { return B.multiply(gp.at(x[1]), et.at(x[0])); },
      [&](const int* x) {
        Accumulator acc;
        for (const auto& s : sw(x[1], 2)) acc.add(B.multiply(et.apply(prod(x[0], s.idx[0])), gp.at(s.idx[1])), s.coef);
        return acc.take();
      }));
  r.add(check_identity(
      "cleft.mixed_exchange", "Σ γ(hk1)ẽ_{k2} = Σ e_{h1}γ(h2k)", {nh, nh},
      [&](const int* x) {
        Accumulator acc;
        for (const auto& s : sw(x[1], 2)) acc.add(B.multiply(g.apply(prod(x[0], s.idx[0])), et.at(s.idx[1])), s.coef);
        return acc.take();
      },
      [&](const int* x) {
        Accumulator acc;
        for (const auto& s : sw(x[0], 2)) acc.add(B.multiply(e.at(s.idx[0]), g.apply(prod(s.idx[1], x[1]))), s.coef);
        return acc.take();
      }));

  // derived identities
  r.add(check_all("cleft.gamma_prime_unit", "γ'(1) = 1", {}, [&](const int*) -> std::optional<std::string> {
    if (gp.apply(H.unit()) != B.unit()) return "γ'(1) = " + gp.apply(H.unit()).to_string();
    return std::nullopt;
  }));
  LinMap ggg = convolve(cd, e, g);
  r.add(check_identity(
      "cleft.gamma_regular", "γ*γ'*γ = γ", {nh}, [&](const int* x) { return ggg.at(x[0]); },
      [&](const int* x) { return g.at(x[0]); }));
  r.add(check_convolution_idempotent("cleft.e_idempotent", "γ*γ' is idempotent", conv_map(cd, e)));
  if (e_in_a) {
    std::vector<SparseVec> cols(nh);
    for (int h = 0; h < nh; ++h) cols[h] = e_in_a_coords(e.at(h));
    ConvolutionElement ea{H.coalgebra_ptr(), cd.coinvariant_algebra, LinMap({nh}, ExactMatrix::from_columns(na, cols))};
    r.add(check_convolution_central("cleft.e_central", "γ*γ' central in Hom(H,A)", ea));
  } else {
    r.add(skipped_check("cleft.e_central", "γ*γ' central in Hom(H,A)", "e_h is not in A"));
  }
  auto expansion = [&](int h, int k, const SparseVec* a) {
    Accumulator acc;
    for (const auto& s : sw(h, 3)) {
      for (const auto& u : sw(k, 3)) {
        SparseVec v = B.multiply(g.at(s.idx[0]), g.at(u.idx[0]));
        if (a) v = B.multiply(v, *a);
        if (v.is_zero()) continue;
        v = B.multiply(v, gp.apply(prod(s.idx[1], u.idx[1])));
        if (v.is_zero()) continue;
        acc.add(B.multiply(v, g.apply(prod(s.idx[2], u.idx[2]))), s.coef * u.coef);
      }
    }
    return acc.take();
  };
  r.add(check_identity(
      "cleft.product_expansion", "γ(h)γ(k) = Σγ(h1)γ(k1)γ'(h2k2)γ(h3k3)", {nh, nh},
      [&](const int* x) { return B.multiply(g.at(x[0]), g.at(x[1])); },
      [&](const int* x) { return expansion(x[0], x[1], nullptr); }));
  r.add(check_identity(
      "cleft.product_expansion_coinvariant", "γ(h)γ(k)a = Σγ(h1)γ(k1)aγ'(h2k2)γ(h3k3)", {nh, nh, na},
      [&](const int* x) { return B.multiply(B.multiply(g.at(x[0]), g.at(x[1])), Asub.basis()[x[2]]); },
      [&](const int* x) { return expansion(x[0], x[1], &Asub.basis()[x[2]]); }));
  r.add(check_identity(
      "cleft.coinvariant_exchange", "γ(h)a = Σγ(h1)aγ'(h2)γ(h3)", {nh, na},
      [&](const int* x) { return B.multiply(g.at(x[0]), Asub.basis()[x[1]]); },
      [&](const int* x) {
        Accumulator acc;
        const SparseVec& a = Asub.basis()[x[1]];
        for (const auto& s : sw(x[0], 3)) {
          acc.add(B.multiply(B.multiply(B.multiply(g.at(s.idx[0]), a), gp.at(s.idx[1])), g.at(s.idx[2])), s.coef);
        }
        return acc.take();
      }));
  return r;
}

CleftData normalize_gamma_prime(const CleftData& cd) {
  CleftData out = cd;
  out.gamma_prime = convolve(cd, convolve(cd, cd.gamma_prime, cd.gamma), cd.gamma_prime);
  return out;
}

Report verify_gamma_normalization(const CleftData& original, const CleftData& normalized) {
  Report r("gamma_normalization");
  int nh = original.extension.hopf->dim();
  const LinMap& g = original.gamma;
  const LinMap& gp = original.gamma_prime;
  const LinMap& gb = normalized.gamma_prime;
  LinMap gbggb = convolve(original, convolve(original, gb, g), gb);
  LinMap gpggp = convolve(original, convolve(original, gp, g), gp);
  LinMap g_gb = convolve(original, g, gb);
  LinMap g_gp = convolve(original, g, gp);
  LinMap gb_g = convolve(original, gb, g);
  LinMap gp_g = convolve(original, gp, g);
  auto same = [&](const std::string& id, const std::string& desc, const LinMap& l, const LinMap& rr) {
    r.add(check_identity(id, desc, {nh}, [&](const int* x) { return l.at(x[0]); }, [&](const int* x) { return rr.at(x[0]); }));
  };
  same("normalize.regular", "γ̄*γ*γ̄ = γ̄", gbggb, gb);
  same("normalize.left_product", "γ*γ̄ = γ*γ'", g_gb, g_gp);
  same("normalize.right_product", "γ̄*γ = γ'*γ", gb_g, gp_g);
  same("normalize.already_normalized", "γ'*γ*γ' = γ'", gpggp, gp);
  return r;
}

TpaPtr reconstruct_action(const CleftData& cd) {
  const auto& H = *cd.extension.hopf;
  const auto& B = *cd.extension.carrier;
  const auto& Asub = cd.coinvariants;
  int nh = H.dim();
  int na = Asub.dim();
  const LinMap& g = cd.gamma;
  const LinMap& gp = cd.gamma_prime;
  auto in_a = [&](const SparseVec& v, const std::string& what) {
    auto c = Asub.coordinates(v);
    if (!c) throw Error(ErrorKind::ImageNotInCoinvariants, what + " is not coinvariant");
    return std::move(*c);
  };
  LinMap action({nh, na}, na);
  LinMap omega({nh, nh}, na);
  LinMap omega_prime({nh, nh}, na);
  for (int h = 0; h < nh; ++h) {
    for (int a = 0; a < na; ++a) {
      Accumulator acc;
      for (const auto& s : H.sweedler(h, 2)) {
        acc.add(B.multiply(B.multiply(g.at(s.idx[0]), Asub.basis()[a]), gp.at(s.idx[1])), s.coef);
      }
      action.column(action.flat(h, a)) = in_a(acc.take(), "h·a");
    }
    for (int k = 0; k < nh; ++k) {
      Accumulator w, wp;
      for (const auto& s : H.sweedler(h, 2)) {
        for (const auto& u : H.sweedler(k, 2)) {
          SparseVec hk1 = H.algebra().product(s.idx[0], u.idx[0]);
          SparseVec hk2 = H.algebra().product(s.idx[1], u.idx[1]);
          w.add(B.multiply(B.multiply(g.at(s.idx[0]), g.at(u.idx[0])), gp.apply(hk2)), s.coef * u.coef);
          wp.add(B.multiply(B.multiply(g.apply(hk1), gp.at(u.idx[1])), gp.at(s.idx[1])), s.coef * u.coef);
        }
      }
      omega.column(omega.flat(h, k)) = in_a(w.take(), "ω(h,k)");
      omega_prime.column(omega_prime.flat(h, k)) = in_a(wp.take(), "ω'(h,k)");
    }
  }
  return std::make_shared<const TwistedPartialAction>(cd.extension.hopf, cd.coinvariant_algebra, std::move(action),
                                                      std::move(omega), std::move(omega_prime));
}

Report compare_reconstruction(const CrossedProduct& original, const CleftData& cd, const TwistedPartialAction& rebuilt) {
  Report r("reconstruction");
  const auto& t = original.tpa();
  const auto& H = t.hopf();
  const auto& A = t.carrier();
  const auto& R = rebuilt.carrier();
  int nh = H.dim();
  int na = A.dim();
  std::vector<SparseVec> phi(na);
  bool defined = true;
  for (int a = 0; a < na; ++a) {
    auto c = cd.coinvariants.coordinates(original.element(SparseVec::unit(a), H.unit()));
    if (!c) {
      defined = false;
      break;
    }
    phi[a] = std::move(*c);
  }
  if (!defined) {
    r.add(make_check("reconstruct.identification", "a ↦ a#1 identifies A with B^{coH}", false, "a#1 is not coinvariant"));
    return r;
  }
  ExactMatrix phim = ExactMatrix::from_columns(R.dim(), phi);
  r.info()["identification_is_identity"] = phim == ExactMatrix::identity(na);
  auto map = [&](const SparseVec& v) { return phim.apply(v); };
  r.add(check_all("reconstruct.identification", "a ↦ a#1 is an algebra isomorphism A → B^{coH}", {na, na},
                  [&](const int* x) -> std::optional<std::string> {
                    if (x[0] == 0 && x[1] == 0 && (R.dim() != na || rank(phim) != na)) return "not bijective";
                    if (map(A.product(x[0], x[1])) != R.multiply(phi[x[0]], phi[x[1]])) return "not multiplicative";
                    return std::nullopt;
                  }));
  r.add(check_identity(
      "reconstruct.action", "reconstructed h·a equals the original", {nh, na},
      [&](const int* x) { return rebuilt.act(x[0], phi[x[1]]); }, [&](const int* x) { return map(t.act(x[0], x[1])); }));
  r.add(check_identity(
      "reconstruct.cocycle", "reconstructed ω equals the original", {nh, nh},
      [&](const int* x) { return rebuilt.omega(x[0], x[1]); }, [&](const int* x) { return map(t.omega(x[0], x[1])); }));
  if (t.inverse_cocycle() && rebuilt.inverse_cocycle()) {
    r.add(check_identity(
        "reconstruct.inverse_cocycle", "reconstructed ω' equals the original", {nh, nh},
        [&](const int* x) { return rebuilt.omega_prime(x[0], x[1]); },
        [&](const int* x) { return map(t.omega_prime(x[0], x[1])); }));
    r.add(check_identity(
        "reconstruct.omega_omega_prime", "ω*ω'(h,k) = h·(k·1)", {nh, nh},
        [&](const int* x) {
          Accumulator acc;
          for (const auto& s : H.sweedler(x[0], 2)) {
            for (const auto& u : H.sweedler(x[1], 2)) {
              acc.add(R.multiply(rebuilt.omega(s.idx[0], u.idx[0]), rebuilt.omega_prime(s.idx[1], u.idx[1])), s.coef * u.coef);
            }
          }
          return acc.take();
        },
        [&](const int* x) { return rebuilt.act(x[0], rebuilt.unit_image(x[1])); }));
    r.add(check_identity(
        "reconstruct.omega_prime_omega", "ω'*ω(h,k) = Σ(h1·1)(h2k·1)", {nh, nh},
        [&](const int* x) {
          Accumulator acc;
          for (const auto& s : H.sweedler(x[0], 2)) {
            for (const auto& u : H.sweedler(x[1], 2)) {
              acc.add(R.multiply(rebuilt.omega_prime(s.idx[0], u.idx[0]), rebuilt.omega(s.idx[1], u.idx[1])), s.coef * u.coef);
            }
          }
          return acc.take();
        },
        [&](const int* x) {
          Accumulator acc;
          for (const auto& s : H.sweedler(x[0], 2)) {
            acc.add(R.multiply(rebuilt.unit_image(s.idx[0]), rebuilt.unit_image(H.algebra().product(s.idx[1], x[1]))), s.coef);
          }
          return acc.take();
        }));
  }
  return r;
}

Report cleft_isomorphism(const CleftData& cd, const CrossedProduct& rebuilt) {
  Report r("cleft_isomorphism");
  const auto& H = *cd.extension.hopf;
  const auto& B = *cd.extension.carrier;
  const auto& Asub = cd.coinvariants;
  const auto& R = *rebuilt.algebra();
  int nh = H.dim();
  int nb = B.dim();
  int d = rebuilt.dim();
  std::vector<SparseVec> phi(d);
  for (int x = 0; x < d; ++x) {
    Accumulator acc;
    for (const auto& e : rebuilt.image().basis()[x]) {
      acc.add(B.multiply(Asub.basis()[e.index / nh], cd.gamma.at(e.index % nh)), e.value);
    }
    phi[x] = acc.take();
  }
  ExactMatrix phim = ExactMatrix::from_columns(nb, phi);
  std::vector<SparseVec> psi(nb);
  std::string psi_error;
  for (int b = 0; b < nb && psi_error.empty(); ++b) {
    Accumulator acc;
    for (const auto& e : cd.extension.rho.at(b)) {
      SparseVec b0 = SparseVec::unit(e.index / nh);
      for (const auto& dl : H.coalgebra().delta(e.index % nh)) {
        auto a = Asub.coordinates(B.multiply(b0, cd.gamma_prime.at(dl.left)));
        if (!a) {
          psi_error = "b0γ'(b1) not coinvariant for b = " + std::to_string(b);
          break;
        }
        acc.add(rebuilt.element(*a, SparseVec::unit(dl.right)), e.value * dl.coef);
      }
    }
    psi[b] = acc.take();
  }
  ExactMatrix psim = ExactMatrix::from_columns(d, psi);
  r.add(make_check("cleft_iso.unital", "Φ(1#1) = 1", phim.apply(R.unit()) == B.unit(), ""));
  r.add(check_identity(
      "cleft_iso.multiplicative", "Φ(xy) = Φ(x)Φ(y)", {d, d}, [&](const int* x) { return phim.apply(R.product(x[0], x[1])); },
      [&](const int* x) { return B.multiply(phi[x[0]], phi[x[1]]); }));
  ComoduleAlgebra rc = comodule_structure(rebuilt);
  r.add(check_identity(
      "cleft_iso.colinear", "ρ∘Φ = (Φ⊗id)ρ", {d}, [&](const int* x) { return cd.extension.rho.apply(phi[x[0]]); },
      [&](const int* x) {
        Accumulator acc;
        for (const auto& e : rc.rho.at(x[0])) acc.add(tensor_vec(phi[e.index / nh], SparseVec::unit(e.index % nh), nh), e.value);
        return acc.take();
      }));
  if (!psi_error.empty()) {
    r.add(make_check("cleft_iso.psi_phi", "Ψ∘Φ = id", false, psi_error));
    r.add(make_check("cleft_iso.phi_psi", "Φ∘Ψ = id", false, psi_error));
    return r;
  }
  r.add(check_identity(
      "cleft_iso.psi_phi", "Ψ∘Φ = id", {d}, [&](const int* x) { return psim.apply(phi[x[0]]); },
      [&](const int* x) { return SparseVec::unit(x[0]); }));
  r.add(check_identity(
      "cleft_iso.phi_psi", "Φ∘Ψ = id", {nb}, [&](const int* x) { return phim.apply(psi[x[0]]); },
      [&](const int* x) { return SparseVec::unit(x[0]); }));
  return r;
}

}  // namespace hp
