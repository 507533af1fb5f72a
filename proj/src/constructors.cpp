#include "hopfpartial/constructors.hpp"

#include <numeric>

namespace hp {

namespace {

std::vector<SparseVec> table_from(int n, const std::function<SparseVec(int, int)>& f) {
  std::vector<SparseVec> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i) * n + j] = f(i, j);
  }
  return t;
}

// Hopf algebra of a finite group given by a product table on indices.
HopfAlgebraData grouplike_hopf(std::string name, int n, const std::function<int(int, int)>& mul,
                               const std::function<int(int)>& inv, int unit) {
  std::vector<std::vector<CoTerm>> comult(n);
  for (int i = 0; i < n; ++i) comult[i] = {{i, i, Scalar(1)}};
  std::vector<SparseVec> s(n);
  for (int i = 0; i < n; ++i) s[i] = SparseVec::unit(inv(i));
  return HopfAlgebraData(name,
                         std::make_shared<StructuredAlgebra>(
                             n, table_from(n, [&](int i, int j) { return SparseVec::unit(mul(i, j)); }),
                             SparseVec::unit(unit), name),
                         std::make_shared<CoalgebraData>(std::move(comult), std::vector<Scalar>(n, Scalar(1))),
                         ExactMatrix::from_columns(n, std::move(s)));
}

}  // namespace

HopfAlgebraData group_algebra(GroupPtr g) {
  const FiniteGroup& G = *g;
  HopfAlgebraData h = grouplike_hopf(
      "k" + G.name(), G.order(), [&](int a, int b) { return G.mul(a, b); }, [&](int a) { return G.inv(a); }, 0);
  for (int x = 0; x < G.order(); ++x) h.basis_labels.push_back("u[" + G.label(x) + "]");
  h.basis_order = "u_g in group element order";
  h.smash = SmashLayout{1, G.order(), g};
  return h;
}

std::vector<int> torus_exponents(int index, int m, int n) {
  std::vector<int> k(n);
  for (int i = n - 1; i >= 0; --i) {
    k[i] = index % m;
    index /= m;
  }
  return k;
}

int torus_index(const std::vector<int>& k, int m) {
  int idx = 0;
  for (int x : k) idx = idx * m + ((x % m) + m) % m;
  return idx;
}

HopfAlgebraData truncated_torus(int m, int n, const std::string& symbol) {
  if (m < 1 || n < 1) throw Error(ErrorKind::Config, "torus order and arity must be positive");
  int dim = 1;
  for (int i = 0; i < n; ++i) dim *= m;
  auto mul = [&](int a, int b) {
    auto ka = torus_exponents(a, m, n);
    auto kb = torus_exponents(b, m, n);
    for (int i = 0; i < n; ++i) ka[i] += kb[i];
    return torus_index(ka, m);
  };
  auto inv = [&](int a) {
    auto k = torus_exponents(a, m, n);
    for (auto& x : k) x = -x;
    return torus_index(k, m);
  };
  std::string name = "(kC" + std::to_string(m) + ")^" + std::to_string(n);
  HopfAlgebraData h = grouplike_hopf(name, dim, mul, inv, 0);
  for (int a = 0; a < dim; ++a) {
    std::string l = symbol + "^(";
    auto k = torus_exponents(a, m, n);
    for (int i = 0; i < n; ++i) l += (i ? "," : "") + std::to_string(k[i]);
    h.basis_labels.push_back(l + ")");
  }
  h.basis_order = "exponent tuples (k_1..k_n) lexicographic, index sum k_i m^(n-1-i)";
  return h;
}

// ---------------------------------------------------------------- actions

ModuleAlgebraAction permutation_action(HopfPtr group_alg, HopfPtr torus, int m, int n,
                                       const std::vector<std::vector<int>>& perm) {
  int ng = group_alg->dim();
  int nl = torus->dim();
  if (static_cast<int>(perm.size()) != ng) throw Error(ErrorKind::ShapeMismatch, "one permutation per group element");
  LinMap act({ng, nl}, nl);
  for (int g = 0; g < ng; ++g) {
    if (static_cast<int>(perm[g].size()) != n) throw Error(ErrorKind::ShapeMismatch, "permutation length differs from n");
    for (int l = 0; l < nl; ++l) {
      auto k = torus_exponents(l, m, n);
      std::vector<int> moved(n);
      for (int i = 0; i < n; ++i) moved[perm[g][i]] = k[i];
      act.column(act.flat(g, l)) = SparseVec::unit(torus_index(moved, m));
    }
  }
  return {std::move(group_alg), std::move(torus), std::move(act)};
}

Report check_module_algebra(const ModuleAlgebraAction& act) {
  Report r("module_algebra");
  const auto& K = *act.acting;
  const auto& L = *act.carrier;
  int nk = K.dim();
  int nl = L.dim();
  auto apply = [&](const SparseVec& k, const SparseVec& l) { return act.action.apply(k, l); };
  r.add(check_identity(
      "module.unit", "1·l = l", {nl}, [&](const int* t) { return apply(K.unit(), SparseVec::unit(t[0])); },
      [&](const int* t) { return SparseVec::unit(t[0]); }));
  r.add(check_identity(
      "module.associative", "(kk')·l = k·(k'·l)", {nk, nk, nl},
      [&](const int* t) { return apply(K.algebra().product(t[0], t[1]), SparseVec::unit(t[2])); },
      [&](const int* t) { return act.action.apply(t[0], act.action.at(t[1], t[2])); }));
  r.add(check_identity(
      "module.multiplicative", "k·(ll') = Σ(k_(1)·l)(k_(2)·l')", {nk, nl, nl},
      [&](const int* t) { return act.action.apply(t[0], L.algebra().product(t[1], t[2])); },
      [&](const int* t) {
        Accumulator acc;
        for (const auto& d : K.coalgebra().delta(t[0])) {
          acc.add(L.algebra().multiply(act.action.at(d.left, t[1]), act.action.at(d.right, t[2])), d.coef);
        }
        return acc.take();
      }));
  r.add(check_identity(
      "module.unital", "k·1 = ε(k)1", {nk}, [&](const int* t) { return act.action.apply(t[0], L.unit()); },
      [&](const int* t) { return L.unit().scaled(K.coalgebra().epsilon(t[0])); }));
  return r;
}

CheckResult check_cocommutative(const HopfAlgebraData& h, const std::string& id) {
  int n = h.dim();
  return check_all(id, "Δ = Δ^cop", {n}, [&](const int* t) -> std::optional<std::string> {
    Accumulator a, b;
    for (const auto& d : h.coalgebra().delta(t[0])) {
      a.add(d.left * n + d.right, d.coef);
      b.add(d.right * n + d.left, d.coef);
    }
    if (a.take() == b.take()) return std::nullopt;
    return "Δ differs from its flip";
  });
}

HopfAlgebraData smash_product(const ModuleAlgebraAction& act) {
  if (!check_cocommutative(*act.carrier).passed()) {
    throw Error(ErrorKind::NotCocommutative, act.carrier->name() + " is not cocommutative");
  }
  Report mr = check_module_algebra(act);
  if (!mr.passed()) {
    throw Error(ErrorKind::NotModuleAlgebra, "law " + mr.first_failure()->id + " fails");
  }
  const auto& K = *act.acting;
  const auto& L = *act.carrier;
  int nk = K.dim();
  int nl = L.dim();
  int n = nk * nl;
  // (l⊗k)(x) for x given in smash coordinates
  auto product = [&](int i, int j) {
    int l = i / nk, k = i % nk, l2 = j / nk, k2 = j % nk;
    Accumulator acc;
    for (const auto& d : K.coalgebra().delta(k)) {
      SparseVec lpart = L.algebra().multiply(SparseVec::unit(l), act.action.at(d.left, l2));
      SparseVec kpart = K.algebra().product(d.right, k2);
      acc.add(tensor_vec(lpart, kpart, nk), d.coef);
    }
    return acc.take();
  };
  auto table = table_from(n, product);
  auto alg = std::make_shared<StructuredAlgebra>(n, std::move(table), tensor_vec(L.unit(), K.unit(), nk),
                                                 L.algebra().label() + "#" + K.algebra().label());
  std::vector<std::vector<CoTerm>> comult(n);
  std::vector<Scalar> counit(n);
  for (int l = 0; l < nl; ++l) {
    for (int k = 0; k < nk; ++k) {
      auto& terms = comult[l * nk + k];
      for (const auto& dl : L.coalgebra().delta(l)) {
        for (const auto& dk : K.coalgebra().delta(k)) {
          terms.push_back({dl.left * nk + dk.left, dl.right * nk + dk.right, dl.coef * dk.coef});
        }
      }
      counit[l * nk + k] = L.coalgebra().epsilon(l) * K.coalgebra().epsilon(k);
    }
  }
  // S(l⊗k) = (1⊗S(k))(S(l)⊗1)
  std::vector<SparseVec> s(n);
  for (int l = 0; l < nl; ++l) {
    for (int k = 0; k < nk; ++k) {
      s[l * nk + k] = alg->multiply(tensor_vec(L.unit(), K.S(k), nk), tensor_vec(L.S(l), K.unit(), nk));
    }
  }
  HopfAlgebraData h(L.name() + "#" + K.name(), alg, std::make_shared<CoalgebraData>(std::move(comult), std::move(counit)),
                    ExactMatrix::from_columns(n, std::move(s)));
  h.basis_order = "pairs (l, k) with l in " + L.name() + ", k in " + K.name() + ", index l*" + std::to_string(nk) + "+k";
  if (!L.basis_labels.empty() && !K.basis_labels.empty()) {
    for (int l = 0; l < nl; ++l) {
      for (int k = 0; k < nk; ++k) h.basis_labels.push_back(L.basis_labels[l] + "⊗" + K.basis_labels[k]);
    }
  }
  GroupPtr g = K.smash && K.smash->outer_dim == 1 ? K.smash->group : nullptr;
  h.smash = SmashLayout{nl, nk, g};
  return h;
}

// ---------------------------------------------------------------- coactions

Coaction permutation_coaction(HopfPtr dual_group, HopfPtr torus, int m, int n, const std::vector<std::vector<int>>& perm) {
  int ng = dual_group->dim();
  int nl = torus->dim();
  if (static_cast<int>(perm.size()) != ng) throw Error(ErrorKind::ShapeMismatch, "one permutation per group element");
  std::vector<SparseVec> cols(nl);
  for (int l = 0; l < nl; ++l) {
    auto k = torus_exponents(l, m, n);
    std::vector<Entry> e;
    for (int g = 0; g < ng; ++g) {
      std::vector<int> moved(n);
      for (int j = 0; j < n; ++j) moved[j] = k[perm[g][j]];
      e.push_back({g * nl + torus_index(moved, m), Scalar(1)});
    }
    cols[l] = SparseVec::from_sorted(std::move(e));
  }
  return {std::move(dual_group), std::move(torus), LinMap({nl}, ExactMatrix::from_columns(ng * nl, std::move(cols)))};
}

Report check_comodule_coalgebra(const Coaction& c) {
  Report r("comodule_coalgebra");
  const auto& K = *c.coacting;
  const auto& L = *c.carrier;
  int nk = K.dim();
  int nl = L.dim();
  const auto& d = c.delta;
  r.add(check_identity(
      "coaction.coassociative", "(Δ⊗id)δ = (id⊗δ)δ", {nl},
      [&](const int* t) {
        Accumulator acc;
        for (const auto& e : d.at(t[0])) {
          for (const auto& dk : K.coalgebra().delta(e.index / nl)) {
            acc.add((dk.left * nk + dk.right) * nl + e.index % nl, e.value * dk.coef);
          }
        }
        return acc.take();
      },
      [&](const int* t) {
        Accumulator acc;
        for (const auto& e : d.at(t[0])) {
          for (const auto& f : d.at(e.index % nl)) acc.add((e.index / nl) * nk * nl + f.index, e.value * f.value);
        }
        return acc.take();
      }));
  r.add(check_identity(
      "coaction.counit", "(ε⊗id)δ = id", {nl},
      [&](const int* t) {
        Accumulator acc;
        for (const auto& e : d.at(t[0])) acc.add(e.index % nl, e.value * K.coalgebra().epsilon(e.index / nl));
        return acc.take();
      },
      [&](const int* t) { return SparseVec::unit(t[0]); }));
  r.add(check_identity(
      "comodule_coalgebra.comult", "Σ l_[-1] ⊗ Δ(l_[0]) = Σ l_(1)[-1] l_(2)[-1] ⊗ l_(1)[0] ⊗ l_(2)[0]", {nl},
      [&](const int* t) {
        Accumulator acc;
        for (const auto& e : d.at(t[0])) {
          for (const auto& dl : L.coalgebra().delta(e.index % nl)) {
            acc.add(((e.index / nl) * nl + dl.left) * nl + dl.right, e.value * dl.coef);
          }
        }
        return acc.take();
      },
      [&](const int* t) {
        Accumulator acc;
        for (const auto& dl : L.coalgebra().delta(t[0])) {
          for (const auto& x : d.at(dl.left)) {
            for (const auto& y : d.at(dl.right)) {
              SparseVec k = K.algebra().product(x.index / nl, y.index / nl);
              for (const auto& ke : k) {
                acc.add((ke.index * nl + x.index % nl) * nl + y.index % nl, dl.coef * x.value * y.value * ke.value);
              }
            }
          }
        }
        return acc.take();
      }));
  r.add(check_identity(
      "comodule_coalgebra.counit", "Σ l_[-1] ε(l_[0]) = ε(l) 1", {nl},
      [&](const int* t) {
        Accumulator acc;
        for (const auto& e : d.at(t[0])) acc.add(e.index / nl, e.value * L.coalgebra().epsilon(e.index % nl));
        return acc.take();
      },
      [&](const int* t) { return K.unit().scaled(L.coalgebra().epsilon(t[0])); }));
  return r;
}

HopfAlgebraData cosemidirect_product(const Coaction& c, GroupPtr group) {
  Report cr = check_comodule_coalgebra(c);
  if (!cr.passed()) throw Error(ErrorKind::NotComoduleCoalgebra, "law " + cr.first_failure()->id + " fails");
  const auto& K = *c.coacting;
  const auto& L = *c.carrier;
  int nk = K.dim();
  int nl = L.dim();
  int n = nk * nl;
  auto alg = std::make_shared<StructuredAlgebra>(tensor_algebra(L.algebra(), K.algebra()));
  std::vector<std::vector<CoTerm>> comult(n);
  std::vector<Scalar> counit(n);
  for (int l = 0; l < nl; ++l) {
    for (int phi = 0; phi < nk; ++phi) {
      Accumulator acc;
      for (const auto& dl : L.coalgebra().delta(l)) {
        for (const auto& co : c.delta.at(dl.right)) {
          int kidx = co.index / nl;
          int l0 = co.index % nl;
          for (const auto& dp : K.coalgebra().delta(phi)) {
            for (const auto& ke : K.algebra().product(kidx, dp.left)) {
              int left = dl.left * nk + ke.index;
              int right = l0 * nk + dp.right;
              acc.add(left * n + right, dl.coef * co.value * dp.coef * ke.value);
            }
          }
        }
      }
      auto& terms = comult[l * nk + phi];
      for (const auto& e : acc.take()) terms.push_back({e.index / n, e.index % n, e.value});
      counit[l * nk + phi] = L.coalgebra().epsilon(l) * K.coalgebra().epsilon(phi);
    }
  }
  // S(l⊗φ) = Σ S_L(l_[0]) ⊗ S_K(l_[-1] φ)
  std::vector<SparseVec> s(n);
  for (int l = 0; l < nl; ++l) {
    for (int phi = 0; phi < nk; ++phi) {
      Accumulator acc;
      for (const auto& co : c.delta.at(l)) {
        SparseVec kp = K.algebra().product(co.index / nl, phi);
        Accumulator sk;
        for (const auto& e : kp) sk.add(K.S(e.index), e.value);
        acc.add(tensor_vec(L.S(co.index % nl), sk.take(), nk), co.value);
      }
      s[l * nk + phi] = acc.take();
    }
  }
  HopfAlgebraData h(L.name() + ">◁" + K.name(), alg, std::make_shared<CoalgebraData>(std::move(comult), std::move(counit)),
                    ExactMatrix::from_columns(n, std::move(s)));
  h.basis_order = "pairs (l, φ) with l in " + L.name() + ", φ in " + K.name() + ", index l*" + std::to_string(nk) + "+φ";
  if (!L.basis_labels.empty() && !K.basis_labels.empty()) {
    for (int l = 0; l < nl; ++l) {
      for (int k = 0; k < nk; ++k) h.basis_labels.push_back(L.basis_labels[l] + "⊗" + K.basis_labels[k]);
    }
  }
  h.smash = SmashLayout{nl, nk, std::move(group)};
  return h;
}

// ---------------------------------------------------------------- pairings

Report check_pairing(const HopfPairing& p) {
  Report r("pairing");
  const auto& H1 = *p.h1;
  const auto& H2 = *p.h2;
  int n1 = H1.dim();
  int n2 = H2.dim();
  auto pair = [&](const SparseVec& a, const SparseVec& x) {
    Scalar s;
    for (const auto& e : a) {
      for (const auto& f : x) {
        const Scalar* v = p.table.column(f.index).find(e.index);
        if (v) s.add_product(e.value * f.value, *v);
      }
    }
    return s;
  };
  auto scalar_check = [](const Scalar& l, const Scalar& rr) -> std::optional<std::string> {
    if (l == rr) return std::nullopt;
    return "lhs = " + l.to_string() + "; rhs = " + rr.to_string();
  };
  r.add(check_all("pairing.product", "<ab, x> = Σ <a, x_(1)><b, x_(2)>", {n1, n1, n2},
                  [&](const int* t) {
                    Scalar rhs;
                    for (const auto& d : H2.coalgebra().delta(t[2])) {
                      rhs.add_product(p(t[0], d.left) * p(t[1], d.right), d.coef);
                    }
                    return scalar_check(pair(H1.algebra().product(t[0], t[1]), SparseVec::unit(t[2])), rhs);
                  }));
  r.add(check_all("pairing.coproduct", "<a, xy> = Σ <a_(1), x><a_(2), y>", {n1, n2, n2},
                  [&](const int* t) {
                    Scalar rhs;
                    for (const auto& d : H1.coalgebra().delta(t[0])) {
                      rhs.add_product(p(d.left, t[1]) * p(d.right, t[2]), d.coef);
                    }
                    return scalar_check(pair(SparseVec::unit(t[0]), H2.algebra().product(t[1], t[2])), rhs);
                  }));
  r.add(check_all("pairing.unit", "<1, x> = ε(x)", {n2}, [&](const int* t) {
    return scalar_check(pair(H1.unit(), SparseVec::unit(t[0])), H2.coalgebra().epsilon(t[0]));
  }));
  r.add(check_all("pairing.counit", "<a, 1> = ε(a)", {n1}, [&](const int* t) {
    return scalar_check(pair(SparseVec::unit(t[0]), H2.unit()), H1.coalgebra().epsilon(t[0]));
  }));
  r.add(check_all("pairing.antipode", "<S(a), x> = <a, S(x)>", {n1, n2}, [&](const int* t) {
    return scalar_check(pair(H1.S(t[0]), SparseVec::unit(t[1])), pair(SparseVec::unit(t[0]), H2.S(t[1])));
  }));
  return r;
}

HopfPairing hopf_pairing(HopfPtr h1, HopfPtr h2, ExactMatrix table) {
  if (table.rows() != h1->dim() || table.cols() != h2->dim()) {
    throw Error(ErrorKind::ShapeMismatch, "pairing table shape differs from dim H1 x dim H2");
  }
  HopfPairing p{std::move(h1), std::move(h2), std::move(table)};
  Report r = check_pairing(p);
  if (!r.passed()) {
    const auto* f = r.first_failure();
    std::string w = f->witnesses.empty() ? "" : " at " + Json(f->witnesses[0].tuple).dump();
    throw Error(ErrorKind::PairingLawViolation, f->id + w);
  }
  return p;
}

ExactMatrix torus_pairing_table(const HopfAlgebraData& h1, const HopfAlgebraData& h2, int m, int n) {
  if (!h1.smash || !h2.smash || h1.smash->inner_dim != h2.smash->inner_dim) {
    throw Error(ErrorKind::NotSmashShape, "pairing needs two products over the same group");
  }
  int ng = h1.smash->inner_dim;
  ExactMatrix t(h1.dim(), h2.dim());
  std::vector<SparseVec> cols(h2.dim());
  for (int j = 0; j < h2.dim(); ++j) {
    auto k = torus_exponents(j / ng, m, n);
    int s = j % ng;
    std::vector<Entry> e;
    for (int i = 0; i < h1.dim(); ++i) {
      if (i % ng != s) continue;
      auto theta = torus_exponents(i / ng, m, n);
      long dot = 0;
      for (int x = 0; x < n; ++x) dot += static_cast<long>(k[x]) * theta[x];
      e.push_back({i, Scalar::root_of_unity(m, dot % m)});
    }
    cols[j] = SparseVec::from_sorted(std::move(e));
  }
  return ExactMatrix::from_columns(h1.dim(), std::move(cols));
}

}  // namespace hp
