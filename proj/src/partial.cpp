#include "hopfpartial/partial.hpp"

#include "hopfpartial/error.hpp"

namespace hp {

namespace {

using Sw = std::vector<SweedlerTerm>;

SparseVec apply_bilinear(const LinMap& m, const SparseVec& x, const SparseVec& y) { return m.apply(x, y); }

bool is_central_idempotent(const StructuredAlgebra& a, const SparseVec& e, std::string* why) {
  if (a.multiply(e, e) != e) {
    *why = "element is not idempotent";
    return false;
  }
  for (int b = 0; b < a.dim(); ++b) {
    SparseVec eb = SparseVec::unit(b);
    if (a.multiply(e, eb) != a.multiply(eb, e)) {
      *why = "element does not commute with basis vector " + std::to_string(b);
      return false;
    }
  }
  return true;
}

std::string first_failure_text(const Report& r) {
  const CheckResult* f = r.first_failure();
  if (!f) return "";
  std::string s = f->id;
  if (!f->witnesses.empty()) s += " at " + Json(f->witnesses[0].tuple).dump() + ": " + f->witnesses[0].detail;
  return s;
}

}  // namespace

// ---------------------------------------------------------------- TwistedPartialAction

TwistedPartialAction::TwistedPartialAction(HopfPtr hopf, AlgebraPtr carrier, LinMap action, LinMap cocycle,
                                           std::optional<LinMap> inverse)
    : hopf_(std::move(hopf)),
      carrier_(std::move(carrier)),
      action_(std::move(action)),
      cocycle_(std::move(cocycle)),
      inverse_(std::move(inverse)) {
  int nh = hopf_->dim();
  int na = carrier_->dim();
  if (action_.source_dims() != std::vector<int>{nh, na} || action_.target_dim() != na) {
    throw Error(ErrorKind::ShapeMismatch, "action must map H⊗A to A");
  }
  if (cocycle_.source_dims() != std::vector<int>{nh, nh} || cocycle_.target_dim() != na) {
    throw Error(ErrorKind::ShapeMismatch, "cocycle must map H⊗H to A");
  }
  if (inverse_ && (inverse_->source_dims() != std::vector<int>{nh, nh} || inverse_->target_dim() != na)) {
    throw Error(ErrorKind::ShapeMismatch, "inverse cocycle must map H⊗H to A");
  }
  unit_image_.resize(nh);
  for (int h = 0; h < nh; ++h) unit_image_[h] = action_.apply(h, carrier_->unit());
}

SparseVec TwistedPartialAction::act(const SparseVec& h, const SparseVec& a) const { return action_.apply(h, a); }

SparseVec TwistedPartialAction::unit_image(const SparseVec& h) const {
  Accumulator acc;
  for (const auto& e : h) acc.add(unit_image_[e.index], e.value);
  return acc.take();
}

SparseVec TwistedPartialAction::omega(const SparseVec& h, const SparseVec& k) const {
  return apply_bilinear(cocycle_, h, k);
}

SparseVec TwistedPartialAction::omega_prime(const SparseVec& h, const SparseVec& k) const {
  return apply_bilinear(*inverse_, h, k);
}

TwistedPartialAction TwistedPartialAction::with_inverse(LinMap inverse) const {
  return TwistedPartialAction(hopf_, carrier_, action_, cocycle_, std::move(inverse));
}

LinMap trivial_cocycle(const HopfAlgebraData& h, const StructuredAlgebra& a, const LinMap& action) {
  int nh = h.dim();
  LinMap w({nh, nh}, a.dim());
  std::vector<SparseVec> ones(nh);
  for (int x = 0; x < nh; ++x) ones[x] = action.apply(x, a.unit());
  for (int x = 0; x < nh; ++x) {
    for (int y = 0; y < nh; ++y) w.column(w.flat(x, y)) = action.apply(x, ones[y]);
  }
  return w;
}

// ---------------------------------------------------------------- verification

Report verify_partial_action(const HopfAlgebraData& H, const StructuredAlgebra& A, const LinMap& action) {
  Report r("partial_action");
  int nh = H.dim();
  int na = A.dim();
  r.add(check_identity(
      "partial.unit_action", "1_H·a = a", {na}, [&](const int* t) { return action.apply(H.unit(), SparseVec::unit(t[0])); },
      [&](const int* t) { return SparseVec::unit(t[0]); }));
  r.add(check_identity(
      "partial.multiplicative", "h·(ab) = Σ(h1·a)(h2·b)", {nh, na, na},
      [&](const int* t) { return action.apply(t[0], A.product(t[1], t[2])); },
      [&](const int* t) {
        Accumulator acc;
        for (const auto& s : H.sweedler(t[0], 2)) {
          acc.add(A.multiply(action.at(s.idx[0], t[1]), action.at(s.idx[1], t[2])), s.coef);
        }
        return acc.take();
      }));
  return r;
}

CheckResult check_twisting(const TwistedPartialAction& t, const std::string& id) {
  const auto& H = t.hopf();
  const auto& A = t.carrier();
  int nh = H.dim();
  int na = A.dim();
  return check_identity(
      id, "Σ(h1·(l1·a))ω(h2,l2) = Σω(h1,l1)(h2l2·a)", {nh, nh, na},
      [&](const int* x) {
        Accumulator acc;
        for (const auto& s : H.sweedler(x[0], 2)) {
          for (const auto& u : H.sweedler(x[1], 2)) {
            acc.add(A.multiply(t.act(s.idx[0], t.act(u.idx[0], x[2])), t.omega(s.idx[1], u.idx[1])), s.coef * u.coef);
          }
        }
        return acc.take();
      },
      [&](const int* x) {
        Accumulator acc;
        SparseVec a = SparseVec::unit(x[2]);
        for (const auto& s : H.sweedler(x[0], 2)) {
          for (const auto& u : H.sweedler(x[1], 2)) {
            acc.add(A.multiply(t.omega(s.idx[0], u.idx[0]), t.act(H.algebra().product(s.idx[1], u.idx[1]), a)),
                    s.coef * u.coef);
          }
        }
        return acc.take();
      });
}

CheckResult check_cocycle_law(const TwistedPartialAction& t, const std::string& id) {
  const auto& H = t.hopf();
  const auto& A = t.carrier();
  int nh = H.dim();
  return check_identity(
      id, "Σ(h1·ω(l1,m1))ω(h2,l2m2) = Σω(h1,l1)ω(h2l2,m)", {nh, nh, nh},
      [&](const int* x) {
        Accumulator acc;
        for (const auto& s : H.sweedler(x[0], 2)) {
          SparseVec h2 = SparseVec::unit(s.idx[1]);
          for (const auto& u : H.sweedler(x[1], 2)) {
            for (const auto& v : H.sweedler(x[2], 2)) {
              acc.add(A.multiply(t.act(s.idx[0], t.omega(u.idx[0], v.idx[0])),
                                 t.omega(h2, H.algebra().product(u.idx[1], v.idx[1]))),
                      s.coef * u.coef * v.coef);
            }
          }
        }
        return acc.take();
      },
      [&](const int* x) {
        Accumulator acc;
        SparseVec m = SparseVec::unit(x[2]);
        for (const auto& s : H.sweedler(x[0], 2)) {
          for (const auto& u : H.sweedler(x[1], 2)) {
            acc.add(A.multiply(t.omega(s.idx[0], u.idx[0]), t.omega(H.algebra().product(s.idx[1], u.idx[1]), m)),
                    s.coef * u.coef);
          }
        }
        return acc.take();
      });
}

Report verify_twisted_partial(const TwistedPartialAction& t) {
  Report r("twisted_partial_action");
  const auto& H = t.hopf();
  const auto& A = t.carrier();
  int nh = H.dim();
  int na = A.dim();
  r.append(verify_partial_action(H, A, t.action()));
  r.add(check_twisting(t));
  r.add(check_identity(
      "twisted.absorption", "ω(h,l) = Σω(h1,l1)(h2l2·1)", {nh, nh}, [&](const int* x) { return t.omega(x[0], x[1]); },
      [&](const int* x) {
        Accumulator acc;
        for (const auto& s : H.sweedler(x[0], 2)) {
          for (const auto& u : H.sweedler(x[1], 2)) {
            acc.add(A.multiply(t.omega(s.idx[0], u.idx[0]), t.unit_image(H.algebra().product(s.idx[1], u.idx[1]))),
                    s.coef * u.coef);
          }
        }
        return acc.take();
      }));
  r.add(check_identity(
      "twisted.left_absorption", "ω(h,l) = Σ(h1·(l1·1))ω(h2,l2)", {nh, nh},
      [&](const int* x) { return t.omega(x[0], x[1]); },
      [&](const int* x) {
        Accumulator acc;
        for (const auto& s : H.sweedler(x[0], 2)) {
          for (const auto& u : H.sweedler(x[1], 2)) {
            acc.add(A.multiply(t.act(s.idx[0], t.unit_image(u.idx[0])), t.omega(s.idx[1], u.idx[1])), s.coef * u.coef);
          }
        }
        return acc.take();
      }));
  r.add(check_identity(
      "twisted.unit_absorption", "ω(h,l) = Σ(h1·1)ω(h2,l)", {nh, nh}, [&](const int* x) { return t.omega(x[0], x[1]); },
      [&](const int* x) {
        Accumulator acc;
        for (const auto& s : H.sweedler(x[0], 2)) {
          acc.add(A.multiply(t.unit_image(s.idx[0]), t.omega(s.idx[1], x[1])), s.coef);
        }
        return acc.take();
      }));
  r.add(check_convolution_idempotent("partial.unit_idempotent", "e*e = e for e(h) = h·1", unit_image_map(t)));
  return r;
}

std::string cocycle_kind_name(CocycleKind k) {
  switch (k) {
    case CocycleKind::Trivial: return "trivial";
    case CocycleKind::NormalizedCocycle: return "normalized_cocycle";
    case CocycleKind::General: return "general";
  }
  return "unknown";
}

CocycleClassification classify_cocycle(const TwistedPartialAction& t) {
  CocycleClassification c;
  c.report = Report("cocycle");
  const auto& H = t.hopf();
  const auto& A = t.carrier();
  int nh = H.dim();
  CheckResult triv = check_all("cocycle.trivial", "h·(l·1) = ω(h,l) = Σ(h1·1)(h2l·1)", {nh, nh},
                               [&](const int* x) -> std::optional<std::string> {
                                 const SparseVec& w = t.omega(x[0], x[1]);
                                 if (t.act(x[0], t.unit_image(x[1])) != w) return "h·(l·1) differs from ω(h,l)";
                                 Accumulator acc;
                                 for (const auto& s : H.sweedler(x[0], 2)) {
                                   acc.add(A.multiply(t.unit_image(s.idx[0]),
                                                      t.unit_image(H.algebra().product(s.idx[1], x[1]))),
                                           s.coef);
                                 }
                                 if (acc.take() != w) return "Σ(h1·1)(h2l·1) differs from ω(h,l)";
                                 return std::nullopt;
                               });
  c.trivial = triv.passed();
  c.report.add(check_all("cocycle.normalization", "ω(h,1) = ω(1,h) = h·1", {nh},
                         [&](const int* x) -> std::optional<std::string> {
                           SparseVec h = SparseVec::unit(x[0]);
                           SparseVec right = t.omega(h, H.unit());
                           SparseVec left = t.omega(H.unit(), h);
                           if (right != t.unit_image(x[0])) return "ω(h,1) = " + right.to_string();
                           if (left != t.unit_image(x[0])) return "ω(1,h) = " + left.to_string();
                           return std::nullopt;
                         }));
  c.report.add(check_cocycle_law(t));
  c.normalized_cocycle = c.report.passed();
  c.kind = c.trivial ? CocycleKind::Trivial
                     : (c.normalized_cocycle ? CocycleKind::NormalizedCocycle : CocycleKind::General);
  c.report.info()["trivial"] = c.trivial;
  c.report.info()["normalized_cocycle"] = c.normalized_cocycle;
  c.report.info()["kind"] = cocycle_kind_name(c.kind);
  return c;
}

CocycleClassification classify_cocycle(const TwistedPartialAction& t, CocycleKind expected) {
  CocycleClassification c = classify_cocycle(t);
  c.report.add(make_check("cocycle.classification", "cocycle kind equals " + cocycle_kind_name(expected),
                          c.kind == expected, "kind is " + cocycle_kind_name(c.kind)));
  return c;
}

// ---------------------------------------------------------------- global actions

Report verify_global(const GlobalTwistedAction& g) {
  Report r("global_action");
  const auto& H = *g.hopf;
  const auto& B = *g.carrier;
  int nh = H.dim();
  int nb = B.dim();
  const LinMap& act = g.action;
  r.add(check_identity(
      "global.unit_action", "1_H▷b = b", {nb}, [&](const int* t) { return act.apply(H.unit(), SparseVec::unit(t[0])); },
      [&](const int* t) { return SparseVec::unit(t[0]); }));
  r.add(check_identity(
      "global.multiplicative", "h▷(ab) = Σ(h1▷a)(h2▷b)", {nh, nb, nb},
      [&](const int* t) { return act.apply(t[0], B.product(t[1], t[2])); },
      [&](const int* t) {
        Accumulator acc;
        for (const auto& s : H.sweedler(t[0], 2)) acc.add(B.multiply(act.at(s.idx[0], t[1]), act.at(s.idx[1], t[2])), s.coef);
        return acc.take();
      }));
  r.add(check_identity(
      "global.unital", "h▷1 = ε(h)1", {nh}, [&](const int* t) { return act.apply(t[0], B.unit()); },
      [&](const int* t) { return B.unit().scaled(H.coalgebra().epsilon(t[0])); }));
  r.add(check_identity(
      "global.twisting", "Σ(h1▷(k1▷a))u(h2,k2) = Σu(h1,k1)(h2k2▷a)", {nh, nh, nb},
      [&](const int* t) {
        Accumulator acc;
        for (const auto& s : H.sweedler(t[0], 2)) {
          for (const auto& u : H.sweedler(t[1], 2)) {
            acc.add(B.multiply(act.apply(s.idx[0], act.at(u.idx[0], t[2])), g.cocycle.at(s.idx[1], u.idx[1])),
                    s.coef * u.coef);
          }
        }
        return acc.take();
      },
      [&](const int* t) {
        Accumulator acc;
        SparseVec a = SparseVec::unit(t[2]);
        for (const auto& s : H.sweedler(t[0], 2)) {
          for (const auto& u : H.sweedler(t[1], 2)) {
            acc.add(B.multiply(g.cocycle.at(s.idx[0], u.idx[0]), act.apply(H.algebra().product(s.idx[1], u.idx[1]), a)),
                    s.coef * u.coef);
          }
        }
        return acc.take();
      }));
  return r;
}

Report verify_global_cocycle(const GlobalTwistedAction& g) {
  Report r("global_cocycle");
  const auto& H = *g.hopf;
  const auto& B = *g.carrier;
  int nh = H.dim();
  const LinMap& u = g.cocycle;
  r.add(check_identity(
      "global.cocycle_law", "Σ(h1▷u(k1,l1))u(h2,k2l2) = Σu(h1,k1)u(h2k2,l)", {nh, nh, nh},
      [&](const int* t) {
        Accumulator acc;
        for (const auto& s : H.sweedler(t[0], 2)) {
          SparseVec h2 = SparseVec::unit(s.idx[1]);
          for (const auto& x : H.sweedler(t[1], 2)) {
            for (const auto& y : H.sweedler(t[2], 2)) {
              acc.add(B.multiply(g.action.apply(s.idx[0], u.at(x.idx[0], y.idx[0])),
                                 u.apply(h2, H.algebra().product(x.idx[1], y.idx[1]))),
                      s.coef * x.coef * y.coef);
            }
          }
        }
        return acc.take();
      },
      [&](const int* t) {
        Accumulator acc;
        SparseVec l = SparseVec::unit(t[2]);
        for (const auto& s : H.sweedler(t[0], 2)) {
          for (const auto& x : H.sweedler(t[1], 2)) {
            acc.add(B.multiply(u.at(s.idx[0], x.idx[0]), u.apply(H.algebra().product(s.idx[1], x.idx[1]), l)),
                    s.coef * x.coef);
          }
        }
        return acc.take();
      }));
  r.add(check_all("global.normalization", "u(h,1) = u(1,h) = ε(h)1", {nh}, [&](const int* t) -> std::optional<std::string> {
    SparseVec h = SparseVec::unit(t[0]);
    SparseVec want = B.unit().scaled(H.coalgebra().epsilon(t[0]));
    if (u.apply(h, H.unit()) != want || u.apply(H.unit(), h) != want) return "u not normalized at h";
    return std::nullopt;
  }));
  return r;
}

AlgebraPtr subalgebra(const StructuredAlgebra& b, const Subspace& s, const SparseVec& unit, const std::string& label) {
  int n = s.dim();
  std::vector<SparseVec> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto c = s.coordinates(b.multiply(s.basis()[i], s.basis()[j]));
      if (!c) throw Error(ErrorKind::ClosureFailure, "subspace not closed under multiplication");
      table[static_cast<std::size_t>(i) * n + j] = std::move(*c);
    }
  }
  return std::make_shared<StructuredAlgebra>(n, std::move(table), unit, label);
}

InducedAction induce_partial(const GlobalTwistedAction& g, const SparseVec& idem) {
  const auto& H = *g.hopf;
  const auto& B = *g.carrier;
  std::string why;
  if (!is_central_idempotent(B, idem, &why)) throw Error(ErrorKind::NotCentralIdempotent, why);
  Report gr = verify_global(g);
  if (!gr.passed()) throw Error(ErrorKind::GlobalLawViolation, first_failure_text(gr));
  int nb = B.dim();
  int nh = H.dim();
  std::vector<SparseVec> gens(nb);
  for (int b = 0; b < nb; ++b) gens[b] = B.multiply(idem, SparseVec::unit(b));
  Subspace image = span(nb, gens);
  int na = image.dim();
  auto coords = [&](const SparseVec& v) {
    auto c = image.coordinates(v);
    if (!c) throw Error(ErrorKind::ClosureFailure, "value outside idem·B");
    return std::move(*c);
  };
  AlgebraPtr A = subalgebra(B, image, coords(idem), B.label() + "·1_A");
  // h·a = idem (h▷a), computed in B
  std::vector<SparseVec> one_b(nh);
  LinMap action({nh, na}, na);
  for (int h = 0; h < nh; ++h) {
    one_b[h] = B.multiply(idem, g.action.apply(h, idem));
    for (int a = 0; a < na; ++a) {
      action.column(action.flat(h, a)) = coords(B.multiply(idem, g.action.apply(h, image.basis()[a])));
    }
  }
  auto one_of = [&](const SparseVec& h) {
    Accumulator acc;
    for (const auto& e : h) acc.add(one_b[e.index], e.value);
    return acc.take();
  };
  // ω(h,k) = Σ(h1·1)u(h2,k1)(h3k2·1)
  LinMap omega({nh, nh}, na);
  for (int h = 0; h < nh; ++h) {
    for (int k = 0; k < nh; ++k) {
      Accumulator acc;
      for (const auto& s : H.sweedler(h, 3)) {
        for (const auto& t : H.sweedler(k, 2)) {
          SparseVec v = B.multiply(B.multiply(one_b[s.idx[0]], g.cocycle.at(s.idx[1], t.idx[0])),
                                   one_of(H.algebra().product(s.idx[2], t.idx[1])));
          acc.add(v, s.coef * t.coef);
        }
      }
      omega.column(omega.flat(h, k)) = coords(acc.take());
    }
  }
  InducedAction out;
  out.tpa = std::make_shared<TwistedPartialAction>(g.hopf, A, std::move(action), std::move(omega));
  out.image = std::move(image);
  out.idempotent = idem;
  return out;
}

// ---------------------------------------------------------------- pairing-derived actions

RestrictedCoaction restrict_coaction(const HopfAlgebraData& h, const SparseVec& e) {
  const auto& H = h.algebra();
  std::string why;
  if (!is_central_idempotent(H, e, &why)) throw Error(ErrorKind::NotCentralIdempotent, why);
  int nh = h.dim();
  std::vector<SparseVec> gens(nh);
  for (int b = 0; b < nh; ++b) gens[b] = H.multiply(e, SparseVec::unit(b));
  Subspace image = span(nh, gens);
  int na = image.dim();
  auto coords = [&](const SparseVec& v) {
    auto c = image.coordinates(v);
    if (!c) throw Error(ErrorKind::ClosureFailure, "value outside e·H");
    return std::move(*c);
  };
  AlgebraPtr A = subalgebra(H, image, coords(e), "e·" + H.label());
  std::vector<SparseVec> cols(na);
  for (int a = 0; a < na; ++a) {
    Accumulator acc;
    for (const auto& x : image.basis()[a]) {
      for (const auto& d : h.coalgebra().delta(x.index)) {
        SparseVec left = coords(H.multiply(e, SparseVec::unit(d.left)));
        for (const auto& l : left) acc.add(l.index * nh + d.right, x.value * d.coef * l.value);
      }
    }
    cols[a] = acc.take();
  }
  return {A, std::move(image), LinMap({na}, ExactMatrix::from_columns(na * nh, std::move(cols)))};
}

TpaPtr pairing_action(const HopfPairing& p, AlgebraPtr carrier, const LinMap& rho, bool verify) {
  const auto& H1 = *p.h1;
  int n1 = H1.dim();
  int n2 = p.h2->dim();
  int na = carrier->dim();
  if (rho.source_dims() != std::vector<int>{na} || rho.target_dim() != na * n2) {
    throw Error(ErrorKind::ShapeMismatch, "coaction must map A to A⊗H2");
  }
  LinMap action({n1, na}, na);
  for (int a = 0; a < na; ++a) {
    const SparseVec& r = rho.at(a);
    for (int h = 0; h < n1; ++h) {
      Accumulator acc;
      for (const auto& e : r) {
        Scalar c = p(h, e.index % n2);
        if (!c.is_zero()) acc.add(e.index / n2, e.value * c);
      }
      action.column(action.flat(h, a)) = acc.take();
    }
  }
  if (verify) {
    Report r = verify_partial_action(H1, *carrier, action);
    if (!r.passed()) throw Error(ErrorKind::ActionLawViolation, first_failure_text(r));
  }
  LinMap w = trivial_cocycle(H1, *carrier, action);
  return std::make_shared<TwistedPartialAction>(p.h1, std::move(carrier), std::move(action), std::move(w));
}

TpaPtr cocycle_twist_smash(const TwistedPartialAction& pa, const GroupCocycleTable& gamma, bool require_normalized) {
  const auto& H = pa.hopf();
  if (!H.smash || !H.smash->group || H.smash->inner_dim != gamma.group().order()) {
    throw Error(ErrorKind::NotSmashShape, H.name() + " is not a smash product over the cocycle's group");
  }
  if (require_normalized && !gamma.is_normalized()) {
    throw Error(ErrorKind::CocycleNotNormalized, "γ(g,1) = γ(1,g) = 1 fails");
  }
  int nh = H.dim();
  LinMap w({nh, nh}, pa.dim_a());
  for (int h = 0; h < nh; ++h) {
    int g = H.smash->group_element(h);
    for (int m = 0; m < nh; ++m) {
      int s = H.smash->group_element(m);
      w.column(w.flat(h, m)) = pa.act(h, pa.unit_image(m)).scaled(gamma(g, s));
    }
  }
  return std::make_shared<TwistedPartialAction>(pa.hopf_ptr(), pa.carrier_ptr(), pa.action(), std::move(w));
}

// ---------------------------------------------------------------- symmetric theory

CoalgebraPtr pair_coalgebra(const HopfAlgebraData& h) {
  return std::make_shared<CoalgebraData>(tensor_coalgebra(h.coalgebra(), h.coalgebra()));
}

namespace {

ConvolutionElement two_variable(const TwistedPartialAction& t, CoalgebraPtr hh,
                                const std::function<SparseVec(int, int)>& f) {
  int nh = t.dim_h();
  std::vector<SparseVec> cols(static_cast<std::size_t>(nh) * nh);
  for (int h = 0; h < nh; ++h) {
    for (int k = 0; k < nh; ++k) cols[static_cast<std::size_t>(h) * nh + k] = f(h, k);
  }
  return {std::move(hh), t.carrier_ptr(), LinMap({nh * nh}, ExactMatrix::from_columns(t.dim_a(), std::move(cols)))};
}

}  // namespace

ConvolutionElement f1_map(const TwistedPartialAction& t, CoalgebraPtr hh) {
  const auto& H = t.hopf();
  return two_variable(t, std::move(hh),
                      [&](int h, int k) { return t.unit_image(h).scaled(H.coalgebra().epsilon(k)); });
}

ConvolutionElement f2_map(const TwistedPartialAction& t, CoalgebraPtr hh) {
  const auto& H = t.hopf();
  return two_variable(t, std::move(hh), [&](int h, int k) { return t.unit_image(H.algebra().product(h, k)); });
}

ConvolutionElement cocycle_map(const LinMap& m, const TwistedPartialAction& t, CoalgebraPtr hh) {
  return two_variable(t, std::move(hh), [&](int h, int k) { return m.at(h, k); });
}

ConvolutionElement unit_image_map(const TwistedPartialAction& t) {
  int nh = t.dim_h();
  std::vector<SparseVec> cols(nh);
  for (int h = 0; h < nh; ++h) cols[h] = t.unit_image(h);
  return {t.hopf().coalgebra_ptr(), t.carrier_ptr(), LinMap({nh}, ExactMatrix::from_columns(t.dim_a(), std::move(cols)))};
}

SymmetryResult verify_symmetric(TpaPtr tp, const Report* cocycle_report) {
  const TwistedPartialAction& t = *tp;
  Report r("symmetric");
  const auto& H = t.hopf();
  const auto& A = t.carrier();
  int nh = H.dim();
  int na = A.dim();
  auto hh = pair_coalgebra(H);
  ConvolutionElement f1 = f1_map(t, hh);
  ConvolutionElement f2 = f2_map(t, hh);
  r.add(check_convolution_central("symmetric.f1_central", "f1(h,k) = (h·1)ε(k) central in Hom(H⊗H,A)", f1));
  r.add(check_convolution_central("symmetric.f2_central", "f2(h,k) = hk·1 central in Hom(H⊗H,A)", f2));
  r.add(check_convolution_central("symmetric.e_central", "e(h) = h·1 central in Hom(H,A)", unit_image_map(t)));

  bool normalized = false;
  std::string detail;
  if (cocycle_report) {
    normalized = cocycle_report->passed();
    detail = first_failure_text(*cocycle_report);
  } else {
    CocycleClassification c = classify_cocycle(t);
    normalized = c.normalized_cocycle;
    detail = first_failure_text(c.report);
  }
  r.add(make_check("symmetric.normalized_cocycle", "ω satisfies normalization and the cocycle law", normalized, detail));

  auto sw2 = [&](int i) -> const Sw& { return H.sweedler(i, 2); };
  auto prod = [&](int i, int j) { return H.algebra().product(i, j); };
  auto absorb = [&](const std::string& id, const std::string& desc, auto&& rhs) {
    r.add(check_identity(id, desc, {nh, nh}, [&](const int* x) { return t.omega(x[0], x[1]); }, rhs));
  };
  absorb("symmetric.omega_absorbs_unit_left", "Σ(h1·1)ω(h2,k) = ω(h,k)", [&](const int* x) {
    Accumulator acc;
    for (const auto& s : sw2(x[0])) acc.add(A.multiply(t.unit_image(s.idx[0]), t.omega(s.idx[1], x[1])), s.coef);
    return acc.take();
  });
  absorb("symmetric.omega_absorbs_unit_right", "Σω(h1,k)(h2·1) = ω(h,k)", [&](const int* x) {
    Accumulator acc;
    for (const auto& s : sw2(x[0])) acc.add(A.multiply(t.omega(s.idx[0], x[1]), t.unit_image(s.idx[1])), s.coef);
    return acc.take();
  });
  absorb("symmetric.omega_absorbs_product_left", "Σ(h1k1·1)ω(h2,k2) = ω(h,k)", [&](const int* x) {
    Accumulator acc;
    for (const auto& s : sw2(x[0])) {
      for (const auto& u : sw2(x[1])) {
        acc.add(A.multiply(t.unit_image(prod(s.idx[0], u.idx[0])), t.omega(s.idx[1], u.idx[1])), s.coef * u.coef);
      }
    }
    return acc.take();
  });
  absorb("symmetric.omega_absorbs_product_right", "Σω(h1,k1)(h2k2·1) = ω(h,k)", [&](const int* x) {
    Accumulator acc;
    for (const auto& s : sw2(x[0])) {
      for (const auto& u : sw2(x[1])) {
        acc.add(A.multiply(t.omega(s.idx[0], u.idx[0]), t.unit_image(prod(s.idx[1], u.idx[1]))), s.coef * u.coef);
      }
    }
    return acc.take();
  });
  absorb("symmetric.omega_absorbs_iterated_left", "Σ(h1·(k1·1))ω(h2,k2) = ω(h,k)", [&](const int* x) {
    Accumulator acc;
    for (const auto& s : sw2(x[0])) {
      for (const auto& u : sw2(x[1])) {
        acc.add(A.multiply(t.act(s.idx[0], t.unit_image(u.idx[0])), t.omega(s.idx[1], u.idx[1])), s.coef * u.coef);
      }
    }
    return acc.take();
  });
  absorb("symmetric.omega_absorbs_iterated_right", "Σω(h1,k1)(h2·(k2·1)) = ω(h,k)", [&](const int* x) {
    Accumulator acc;
    for (const auto& s : sw2(x[0])) {
      for (const auto& u : sw2(x[1])) {
        acc.add(A.multiply(t.omega(s.idx[0], u.idx[0]), t.act(s.idx[1], t.unit_image(u.idx[1]))), s.coef * u.coef);
      }
    }
    return acc.take();
  });

  // h·(k·1) = Σ(h1·1)(h2k·1)
  r.add(check_identity(
      "symmetric.unit_composition", "h·(k·1) = Σ(h1·1)(h2k·1)", {nh, nh},
      [&](const int* x) { return t.act(x[0], t.unit_image(x[1])); },
      [&](const int* x) {
        Accumulator acc;
        for (const auto& s : sw2(x[0])) acc.add(A.multiply(t.unit_image(s.idx[0]), t.unit_image(prod(s.idx[1], x[1]))), s.coef);
        return acc.take();
      }));

  std::optional<LinMap> inverse;
  std::string solver_error;
  try {
    ConvolutionElement w = cocycle_map(t.cocycle(), t, hh);
    ConvolutionElement wp = convolution_inverse_in_ideal(w, f1, f2);
    inverse = LinMap({nh, nh}, wp.map.matrix());
  } catch (const Error& e) {
    solver_error = e.what();
  }
  r.add(make_check("symmetric.inverse_exists", "unique ω' in <f1*f2> with ω*ω' = ω'*ω = f1*f2", inverse.has_value(),
                   solver_error));

  std::vector<std::pair<std::string, std::string>> dependent = {
      {"symmetric.inverse_absorption", "ω'(h,k) = Σω'(h1,k1)(h2·1) = Σω'(h1,k1)(h2k2·1)"},
      {"symmetric.inverse_identity", "ω*ω' = ω'*ω = Σ(h1·1)(h2k·1)"},
      {"symmetric.inverse_normalized", "ω'(h,1) = ω'(1,h) = h·1"},
      {"symmetric.conjugation", "h·(k·a) = Σω(h1,k1)(h2k2·a)ω'(h3,k3)"},
      {"symmetric.inverse_twisting", "Σω'(h1,k1)(h2·(k2·a)) = Σ(h1k1·a)ω'(h2,k2)"},
      {"symmetric.action_on_cocycle", "h·ω(k,m) = Σω(h1,k1)ω(h2k2,m1)ω'(h3,k3m2)"},
      {"symmetric.action_on_inverse", "h·ω'(k,m) = Σω(h1,k1m1)ω'(h2k2,m2)ω'(h3,k3)"},
  };
  if (!inverse) {
    r.skip(dependent, "no ω' available");
    return {std::move(r), tp};
  }
  auto tw = std::make_shared<TwistedPartialAction>(t.with_inverse(*inverse));
  const TwistedPartialAction& T = *tw;
  auto sw3 = [&](int i) -> const Sw& { return H.sweedler(i, 3); };

  r.add(check_all(dependent[0].first, dependent[0].second, {nh, nh}, [&](const int* x) -> std::optional<std::string> {
    Accumulator a1, a2;
    for (const auto& s : sw2(x[0])) {
      for (const auto& u : sw2(x[1])) {
        a1.add(A.multiply(T.omega_prime(s.idx[0], u.idx[0]), T.unit_image(s.idx[1])), s.coef * u.coef);
        a2.add(A.multiply(T.omega_prime(s.idx[0], u.idx[0]), T.unit_image(prod(s.idx[1], u.idx[1]))), s.coef * u.coef);
      }
    }
    const SparseVec& w = T.omega_prime(x[0], x[1]);
    if (a1.take() != w) return "ω' does not absorb h·1";
    if (a2.take() != w) return "ω' does not absorb hk·1";
    return std::nullopt;
  }));
  r.add(check_all(dependent[1].first, dependent[1].second, {nh, nh}, [&](const int* x) -> std::optional<std::string> {
    Accumulator l, rr, e;
    for (const auto& s : sw2(x[0])) {
      for (const auto& u : sw2(x[1])) {
        l.add(A.multiply(T.omega(s.idx[0], u.idx[0]), T.omega_prime(s.idx[1], u.idx[1])), s.coef * u.coef);
        rr.add(A.multiply(T.omega_prime(s.idx[0], u.idx[0]), T.omega(s.idx[1], u.idx[1])), s.coef * u.coef);
      }
      e.add(A.multiply(T.unit_image(s.idx[0]), T.unit_image(prod(s.idx[1], x[1]))), s.coef);
    }
    SparseVec want = e.take();
    if (l.take() != want) return "ω*ω' differs from Σ(h1·1)(h2k·1)";
    if (rr.take() != want) return "ω'*ω differs from Σ(h1·1)(h2k·1)";
    return std::nullopt;
  }));
  r.add(check_all(dependent[2].first, dependent[2].second, {nh}, [&](const int* x) -> std::optional<std::string> {
    SparseVec h = SparseVec::unit(x[0]);
    if (T.omega_prime(h, H.unit()) != T.unit_image(x[0])) return "ω'(h,1) differs from h·1";
    if (T.omega_prime(H.unit(), h) != T.unit_image(x[0])) return "ω'(1,h) differs from h·1";
    return std::nullopt;
  }));
  r.add(check_identity(
      dependent[3].first, dependent[3].second, {nh, nh, na},
      [&](const int* x) { return T.act(x[0], T.act(x[1], x[2])); },
      [&](const int* x) {
        Accumulator acc;
        SparseVec a = SparseVec::unit(x[2]);
        for (const auto& s : sw3(x[0])) {
          for (const auto& u : sw3(x[1])) {
            acc.add(A.multiply(A.multiply(T.omega(s.idx[0], u.idx[0]), T.act(prod(s.idx[1], u.idx[1]), a)),
                               T.omega_prime(s.idx[2], u.idx[2])),
                    s.coef * u.coef);
          }
        }
        return acc.take();
      }));
  r.add(check_identity(
      dependent[4].first, dependent[4].second, {nh, nh, na},
      [&](const int* x) {
        Accumulator acc;
        for (const auto& s : sw2(x[0])) {
          for (const auto& u : sw2(x[1])) {
            acc.add(A.multiply(T.omega_prime(s.idx[0], u.idx[0]), T.act(s.idx[1], T.act(u.idx[1], x[2]))), s.coef * u.coef);
          }
        }
        return acc.take();
      },
      [&](const int* x) {
        Accumulator acc;
        SparseVec a = SparseVec::unit(x[2]);
        for (const auto& s : sw2(x[0])) {
          for (const auto& u : sw2(x[1])) {
            acc.add(A.multiply(T.act(prod(s.idx[0], u.idx[0]), a), T.omega_prime(s.idx[1], u.idx[1])), s.coef * u.coef);
          }
        }
        return acc.take();
      }));
  r.add(check_identity(
      dependent[5].first, dependent[5].second, {nh, nh, nh},
      [&](const int* x) { return T.act(x[0], T.omega(x[1], x[2])); },
      [&](const int* x) {
        Accumulator acc;
        for (const auto& s : sw3(x[0])) {
          SparseVec h1 = SparseVec::unit(s.idx[0]);
          for (const auto& u : sw3(x[1])) {
            SparseVec hk = prod(s.idx[1], u.idx[1]);
            SparseVec w1 = T.omega(s.idx[0], u.idx[0]);
            for (const auto& v : sw2(x[2])) {
              acc.add(A.multiply(A.multiply(w1, T.omega(hk, SparseVec::unit(v.idx[0]))),
                                 T.omega_prime(SparseVec::unit(s.idx[2]), prod(u.idx[2], v.idx[1]))),
                      s.coef * u.coef * v.coef);
            }
          }
          (void)h1;
        }
        return acc.take();
      }));
  r.add(check_identity(
      dependent[6].first, dependent[6].second, {nh, nh, nh},
      [&](const int* x) { return T.act(x[0], T.omega_prime(x[1], x[2])); },
      [&](const int* x) {
        Accumulator acc;
        for (const auto& s : sw3(x[0])) {
          for (const auto& u : sw3(x[1])) {
            SparseVec hk = prod(s.idx[1], u.idx[1]);
            const SparseVec& w3 = T.omega_prime(s.idx[2], u.idx[2]);
            for (const auto& v : sw2(x[2])) {
              acc.add(A.multiply(A.multiply(T.omega(SparseVec::unit(s.idx[0]), prod(u.idx[0], v.idx[0])),
                                            T.omega_prime(hk, SparseVec::unit(v.idx[1]))),
                                 w3),
                      s.coef * u.coef * v.coef);
            }
          }
        }
        return acc.take();
      }));
  return {std::move(r), tw};
}

// ---------------------------------------------------------------- group dictionary

Report verify_group_partial(const GroupTwistedPartialAction& p) {
  Report r("group_partial_action");
  const FiniteGroup& G = *p.group;
  const StructuredAlgebra& A = *p.carrier;
  int ng = G.order();
  int na = A.dim();
  auto alpha = [&](int g, const SparseVec& a) { return p.alpha[g].apply(a); };
  r.add(check_all("group_partial.idempotents", "1_g is a central idempotent", {ng}, [&](const int* t) -> std::optional<std::string> {
    std::string why;
    if (!is_central_idempotent(A, p.idempotents[t[0]], &why)) return why;
    return std::nullopt;
  }));
  r.add(check_all("group_partial.identity", "1_e = 1 and α_e = id", {na}, [&](const int* t) -> std::optional<std::string> {
    if (p.idempotents[0] != A.unit()) return "1_e differs from 1";
    if (p.alpha[0].column(t[0]) != SparseVec::unit(t[0])) return "α_e moves a basis vector";
    return std::nullopt;
  }));
  r.add(check_all("group_partial.alpha_algebra_map", "α_g: D_{g⁻¹} → D_g is a unital algebra isomorphism", {ng},
                  [&](const int* t) -> std::optional<std::string> {
                    int g = t[0];
                    const SparseVec& src = p.idempotents[G.inv(g)];
                    const SparseVec& dst = p.idempotents[g];
                    if (alpha(g, src) != dst) return "α_g(1_{g⁻¹}) differs from 1_g";
                    for (int a = 0; a < na; ++a) {
                      SparseVec x = SparseVec::unit(a);
                      if (alpha(g, x) != alpha(g, A.multiply(x, src))) return "α_g depends on a outside D_{g⁻¹}";
                      if (A.multiply(alpha(g, x), dst) != alpha(g, x)) return "α_g leaves D_g";
                      for (int b = 0; b < na; ++b) {
                        SparseVec y = SparseVec::unit(b);
                        if (alpha(g, A.multiply(x, y)) != A.multiply(alpha(g, x), alpha(g, y))) {
                          return "α_g not multiplicative";
                        }
                      }
                    }
                    int dsrc = rank(A.left_mult_matrix(src));
                    int ddst = rank(A.left_mult_matrix(dst));
                    if (rank(p.alpha[g]) != ddst || dsrc != ddst) return "α_g is not bijective onto D_g";
                    return std::nullopt;
                  }));
  r.add(check_identity(
      "group_partial.compatibility", "α_g(α_h(a1_{h⁻¹})1_{g⁻¹})w_{g,h} = w_{g,h}α_{gh}(a1_{(gh)⁻¹})", {ng, ng, na},
      [&](const int* t) {
        SparseVec x = alpha(t[1], SparseVec::unit(t[2]));
        return A.multiply(alpha(t[0], A.multiply(x, p.idempotents[G.inv(t[0])])), p.w[t[0] * ng + t[1]]);
      },
      [&](const int* t) {
        return A.multiply(p.w[t[0] * ng + t[1]], alpha(G.mul(t[0], t[1]), SparseVec::unit(t[2])));
      }));
  r.add(check_identity(
      "group_partial.cocycle_support", "w_{g,h} ∈ D_g D_{gh}", {ng, ng},
      [&](const int* t) { return p.w[t[0] * ng + t[1]]; },
      [&](const int* t) {
        return A.multiply(A.multiply(p.w[t[0] * ng + t[1]], p.idempotents[t[0]]), p.idempotents[G.mul(t[0], t[1])]);
      }));
  return r;
}

TpaPtr group_dictionary(const GroupTwistedPartialAction& p, HopfPtr group_alg) {
  int ng = p.group->order();
  if (group_alg->dim() != ng || !group_alg->smash || group_alg->smash->outer_dim != 1) {
    throw Error(ErrorKind::PreconditionViolation, "Hopf algebra is not the group algebra of the partial action's group");
  }
  Report r = verify_group_partial(p);
  if (!r.passed()) throw Error(ErrorKind::PreconditionViolation, first_failure_text(r));
  int na = p.carrier->dim();
  LinMap action({ng, na}, na);
  LinMap w({ng, ng}, na);
  for (int g = 0; g < ng; ++g) {
    for (int a = 0; a < na; ++a) action.column(action.flat(g, a)) = p.alpha[g].column(a);
    for (int h = 0; h < ng; ++h) w.column(w.flat(g, h)) = p.w[g * ng + h];
  }
  return std::make_shared<TwistedPartialAction>(std::move(group_alg), p.carrier, std::move(action), std::move(w));
}

GroupTwistedPartialAction group_dictionary_inverse(const TwistedPartialAction& t) {
  const auto& H = t.hopf();
  if (!H.smash || H.smash->outer_dim != 1 || !H.smash->group) {
    throw Error(ErrorKind::PreconditionViolation, "Hopf algebra is not a group algebra");
  }
  const StructuredAlgebra& A = t.carrier();
  GroupPtr G = H.smash->group;
  int ng = G->order();
  int na = A.dim();
  GroupTwistedPartialAction p;
  p.group = G;
  p.carrier = t.carrier_ptr();
  for (int g = 0; g < ng; ++g) {
    std::string why;
    if (!is_central_idempotent(A, t.unit_image(g), &why)) {
      throw Error(ErrorKind::PreconditionViolation, "1_" + G->label(g) + " = g·1 fails: " + why);
    }
    p.idempotents.push_back(t.unit_image(g));
  }
  for (int g = 0; g < ng; ++g) {
    // w_{g,g⁻¹} invertible in 1_g A: x ∈ 1_g A with wx = xw = 1_g
    const SparseVec& wg = t.omega(g, G->inv(g));
    const SparseVec& one = p.idempotents[g];
    ExactMatrix m = A.left_mult_matrix(wg) * A.left_mult_matrix(one);
    bool ok = true;
    SparseVec x;
    try {
      SolveResult s = solve_linear(m, ExactMatrix::from_columns(na, {one}));
      x = A.multiply(one, s.solution.column(0));
      ok = A.multiply(wg, x) == one && A.multiply(x, wg) == one;
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) {
      throw Error(ErrorKind::PreconditionViolation,
                  "w_{" + G->label(g) + "," + G->label(G->inv(g)) + "} is not invertible in 1_g A");
    }
  }
  for (int g = 0; g < ng; ++g) {
    std::vector<SparseVec> cols(na);
    for (int a = 0; a < na; ++a) cols[a] = t.act(g, a);
    p.alpha.push_back(ExactMatrix::from_columns(na, std::move(cols)));
  }
  for (int g = 0; g < ng; ++g) {
    for (int h = 0; h < ng; ++h) p.w.push_back(t.omega(g, h));
  }
  return p;
}

}  // namespace hp
