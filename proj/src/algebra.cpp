#include "hopfpartial/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "hopfpartial/parallel.hpp"

namespace hp {

SparseVec tensor_vec(const SparseVec& a, const SparseVec& b, int dimb) {
  std::vector<Entry> out;
  out.reserve(a.nnz() * b.nnz());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back({x.index * dimb + y.index, x.value * y.value});
  }
  return SparseVec::from_sorted(std::move(out));
}

// ---------------------------------------------------------------- LinMap

LinMap::LinMap(std::vector<int> source_dims, int target_dim) : source_dims_(std::move(source_dims)) {
  int n = 1;
  for (int d : source_dims_) n *= d;
  matrix_ = ExactMatrix(target_dim, n);
}

LinMap::LinMap(std::vector<int> source_dims, ExactMatrix matrix)
    : source_dims_(std::move(source_dims)), matrix_(std::move(matrix)) {
  int n = 1;
  for (int d : source_dims_) n *= d;
  if (n != matrix_.cols()) throw Error(ErrorKind::ShapeMismatch, "map width differs from source dimensions");
}

SparseVec LinMap::apply(const SparseVec& x) const { return matrix_.apply(x); }

SparseVec LinMap::apply(const SparseVec& x, const SparseVec& y) const {
  Accumulator acc;
  for (const auto& a : x) {
    for (const auto& b : y) acc.add(at(a.index, b.index), a.value * b.value);
  }
  return acc.take();
}

SparseVec LinMap::apply(int i, const SparseVec& y) const {
  Accumulator acc;
  for (const auto& b : y) acc.add(at(i, b.index), b.value);
  return acc.take();
}

// ---------------------------------------------------------------- algebras

StructuredAlgebra::StructuredAlgebra(int dim, std::vector<SparseVec> table, SparseVec unit, std::string label)
    : dim_(dim), table_(std::move(table)), unit_(std::move(unit)), label_(std::move(label)) {
  if (static_cast<long long>(table_.size()) != static_cast<long long>(dim) * dim) {
    throw Error(ErrorKind::ShapeMismatch, "multiplication table size differs from dim^2");
  }
}

StructuredAlgebra::StructuredAlgebra(int dim, ProductFn product, SparseVec unit, std::string label)
    : dim_(dim), fn_(std::move(product)), unit_(std::move(unit)), label_(std::move(label)) {}

SparseVec StructuredAlgebra::product(int i, int j) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(i) * dim_ + j];
  return fn_(i, j);
}

SparseVec StructuredAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
  Accumulator acc;
  for (const auto& a : x) {
    for (const auto& b : y) {
      Scalar c = a.value * b.value;
      if (!table_.empty()) {
        acc.add(table_[static_cast<std::size_t>(a.index) * dim_ + b.index], c);
      } else {
        acc.add(fn_(a.index, b.index), c);
      }
    }
  }
  return acc.take();
}

ExactMatrix StructuredAlgebra::left_mult_matrix(const SparseVec& x) const {
  std::vector<SparseVec> cols(dim_);
  for (int j = 0; j < dim_; ++j) cols[j] = multiply(x, SparseVec::unit(j));
  return ExactMatrix::from_columns(dim_, std::move(cols));
}

ExactMatrix StructuredAlgebra::right_mult_matrix(const SparseVec& x) const {
  std::vector<SparseVec> cols(dim_);
  for (int j = 0; j < dim_; ++j) cols[j] = multiply(SparseVec::unit(j), x);
  return ExactMatrix::from_columns(dim_, std::move(cols));
}

// ---------------------------------------------------------------- coalgebras

CoalgebraData::CoalgebraData(std::vector<std::vector<CoTerm>> comult, std::vector<Scalar> counit)
    : comult_(std::move(comult)), counit_(std::move(counit)) {
  if (comult_.size() != counit_.size()) throw Error(ErrorKind::ShapeMismatch, "counit length differs from dim");
  for (auto& terms : comult_) {
    std::sort(terms.begin(), terms.end(), [](const CoTerm& a, const CoTerm& b) {
      return a.left != b.left ? a.left < b.left : a.right < b.right;
    });
  }
}

Scalar CoalgebraData::epsilon(const SparseVec& x) const {
  Scalar s;
  for (const auto& e : x) s.add_product(e.value, counit_[e.index]);
  return s;
}

SparseVec CoalgebraData::delta_vec(const SparseVec& x) const {
  Accumulator acc;
  int d = dim();
  for (const auto& e : x) {
    for (const auto& t : comult_[e.index]) acc.add(t.left * d + t.right, t.coef * e.value);
  }
  return acc.take();
}

// ---------------------------------------------------------------- Hopf

HopfAlgebraData::HopfAlgebraData(std::string name, AlgebraPtr algebra, CoalgebraPtr coalgebra, ExactMatrix antipode)
    : name_(std::move(name)),
      algebra_(std::move(algebra)),
      coalgebra_(std::move(coalgebra)),
      antipode_(std::move(antipode)),
      cache_(std::make_unique<Cache>()) {
  int n = algebra_->dim();
  if (coalgebra_->dim() != n || antipode_.rows() != n || antipode_.cols() != n) {
    throw Error(ErrorKind::ShapeMismatch, "Hopf data dimensions disagree");
  }
  const SparseVec& u = algebra_->unit();
  if (u.nnz() == 1 && u.entries()[0].value.is_one()) unit_index_ = u.entries()[0].index;
  grouplike_ = true;
  for (int i = 0; i < n && grouplike_; ++i) {
    const auto& d = coalgebra_->delta(i);
    grouplike_ = d.size() == 1 && d[0].left == i && d[0].right == i && d[0].coef.is_one() &&
                 coalgebra_->epsilon(i).is_one();
  }
}

HopfAlgebraData::HopfAlgebraData(const HopfAlgebraData& o)
    : smash(o.smash),
      basis_labels(o.basis_labels),
      basis_order(o.basis_order),
      name_(o.name_),
      algebra_(o.algebra_),
      coalgebra_(o.coalgebra_),
      antipode_(o.antipode_),
      unit_index_(o.unit_index_),
      grouplike_(o.grouplike_),
      cache_(std::make_unique<Cache>()) {}

HopfAlgebraData HopfAlgebraData::with_antipode(ExactMatrix s) const {
  HopfAlgebraData h(name_, algebra_, coalgebra_, std::move(s));
  h.smash = smash;
  h.basis_labels = basis_labels;
  h.basis_order = basis_order;
  return h;
}

const std::vector<SweedlerTerm>& HopfAlgebraData::sweedler(int i, int legs) const {
  if (legs < 1 || legs > kMaxLegs) throw Error(ErrorKind::PreconditionViolation, "unsupported Sweedler leg count");
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->by_legs.find(legs);
  if (it != cache_->by_legs.end()) return (*it->second)[i];
  int n = dim();
  for (int l = 1; l <= legs; ++l) {
    if (cache_->by_legs.count(l)) continue;
    auto table = std::make_unique<std::vector<std::vector<SweedlerTerm>>>(n);
    for (int b = 0; b < n; ++b) {
      std::vector<SweedlerTerm> terms;
      if (l == 1) {
        SweedlerTerm t{};
        t.idx.fill(0);
        t.idx[0] = b;
        t.coef = Scalar(1);
        terms.push_back(t);
      } else {
        // (id^{l-2} ⊗ Δ) applied to the last leg of Δ^{(l-1)}.
        for (const auto& p : (*cache_->by_legs.at(l - 1))[b]) {
          for (const auto& ct : coalgebra_->delta(p.idx[l - 2])) {
            SweedlerTerm t = p;
            t.idx[l - 2] = ct.left;
            t.idx[l - 1] = ct.right;
            t.coef = p.coef * ct.coef;
            terms.push_back(std::move(t));
          }
        }
        std::stable_sort(terms.begin(), terms.end(),
                         [](const SweedlerTerm& a, const SweedlerTerm& c) { return a.idx < c.idx; });
        std::vector<SweedlerTerm> merged;
        for (auto& t : terms) {
          if (!merged.empty() && merged.back().idx == t.idx) {
            merged.back().coef += t.coef;
          } else {
            if (!merged.empty() && merged.back().coef.is_zero()) merged.pop_back();
            merged.push_back(std::move(t));
          }
        }
        if (!merged.empty() && merged.back().coef.is_zero()) merged.pop_back();
        terms = std::move(merged);
      }
      (*table)[b] = std::move(terms);
    }
    cache_->by_legs.emplace(l, std::move(table));
  }
  return (*cache_->by_legs.at(legs))[i];
}

LinMap iterated_comult(const HopfAlgebraData& h, int legs) {
  int n = h.dim();
  std::vector<int> dims(legs, n);
  std::vector<SparseVec> cols(n);
  long long target = 1;
  for (int l = 0; l < legs; ++l) target *= n;
  for (int i = 0; i < n; ++i) {
    std::vector<Entry> e;
    for (const auto& t : h.sweedler(i, legs)) {
      long long flat = 0;
      for (int l = 0; l < legs; ++l) flat = flat * n + t.idx[l];
      e.push_back({static_cast<int>(flat), t.coef});
    }
    // idx tuples ascend lexicographically, so flat indices ascend too
    cols[i] = SparseVec::from_sorted(std::move(e));
  }
  LinMap m({n}, ExactMatrix::from_columns(static_cast<int>(target), std::move(cols)));
  return m;
}

Report validate_algebra(const StructuredAlgebra& a, const std::string& prefix) {
  Report r("algebra");
  int n = a.dim();
  r.add(check_identity(
      prefix + "associativity", "(e_i e_j) e_k = e_i (e_j e_k)", {n, n, n},
      [&](const int* t) { return a.multiply(a.product(t[0], t[1]), SparseVec::unit(t[2])); },
      [&](const int* t) { return a.multiply(SparseVec::unit(t[0]), a.product(t[1], t[2])); }));
  r.add(check_all(prefix + "unit", "1 e_i = e_i = e_i 1", {n}, [&](const int* t) -> std::optional<std::string> {
    SparseVec e = SparseVec::unit(t[0]);
    if (a.multiply(a.unit(), e) != e) return "left unit fails";
    if (a.multiply(e, a.unit()) != e) return "right unit fails";
    return std::nullopt;
  }));
  return r;
}

Report validate_hopf(const HopfAlgebraData& h) {
  Report r("validate_hopf:" + h.name());
  r.info()["dim"] = h.dim();
  if (!h.basis_order.empty()) r.info()["basis_order"] = h.basis_order;
  const auto& A = h.algebra();
  const auto& C = h.coalgebra();
  int n = h.dim();
  r.append(validate_algebra(A));

  auto delta3_left = [&](int i) {
    // (Δ ⊗ id) Δ
    Accumulator acc;
    for (const auto& t : C.delta(i)) {
      for (const auto& s : C.delta(t.left)) acc.add((s.left * n + s.right) * n + t.right, t.coef * s.coef);
    }
    return acc.take();
  };
  auto delta3_right = [&](int i) {
    Accumulator acc;
    for (const auto& t : C.delta(i)) {
      for (const auto& s : C.delta(t.right)) acc.add((t.left * n + s.left) * n + s.right, t.coef * s.coef);
    }
    return acc.take();
  };
  r.add(check_identity(
      "coalgebra.coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ", {n}, [&](const int* t) { return delta3_left(t[0]); },
      [&](const int* t) { return delta3_right(t[0]); }));
  r.add(check_all("coalgebra.counit", "(ε⊗id)Δ = id = (id⊗ε)Δ", {n}, [&](const int* t) -> std::optional<std::string> {
    Accumulator l, rr;
    for (const auto& d : C.delta(t[0])) {
      l.add(d.right, d.coef * C.epsilon(d.left));
      rr.add(d.left, d.coef * C.epsilon(d.right));
    }
    SparseVec e = SparseVec::unit(t[0]);
    if (l.take() != e) return "(ε⊗id)Δ differs from id";
    if (rr.take() != e) return "(id⊗ε)Δ differs from id";
    return std::nullopt;
  }));

  auto tensor_product = [&](const SparseVec& x, const SparseVec& y) {
    // product in H ⊗ H of flattened vectors
    Accumulator acc;
    for (const auto& a : x) {
      for (const auto& b : y) {
        SparseVec p1 = A.product(a.index / n, b.index / n);
        SparseVec p2 = A.product(a.index % n, b.index % n);
        acc.add(tensor_vec(p1, p2, n), a.value * b.value);
      }
    }
    return acc.take();
  };
  r.add(check_identity(
      "bialgebra.comult_multiplicative", "Δ(e_i e_j) = Δ(e_i) Δ(e_j)", {n, n},
      [&](const int* t) { return C.delta_vec(A.product(t[0], t[1])); },
      [&](const int* t) {
        return tensor_product(C.delta_vec(SparseVec::unit(t[0])), C.delta_vec(SparseVec::unit(t[1])));
      }));
  r.add(make_check("bialgebra.comult_unital", "Δ(1) = 1⊗1", C.delta_vec(A.unit()) == tensor_vec(A.unit(), A.unit(), n),
                   "Δ(1) = " + C.delta_vec(A.unit()).to_string()));
  r.add(check_all("bialgebra.counit_multiplicative", "ε(e_i e_j) = ε(e_i) ε(e_j)", {n, n},
                  [&](const int* t) -> std::optional<std::string> {
                    if (C.epsilon(A.product(t[0], t[1])) == C.epsilon(t[0]) * C.epsilon(t[1])) return std::nullopt;
                    return "ε not multiplicative";
                  }));
  r.add(make_check("bialgebra.counit_unital", "ε(1) = 1", C.epsilon(A.unit()).is_one()));
  r.add(check_all("hopf.antipode", "m(S⊗id)Δ = ηε = m(id⊗S)Δ", {n}, [&](const int* t) -> std::optional<std::string> {
    Accumulator l, rr;
    for (const auto& d : C.delta(t[0])) {
      l.add(A.multiply(h.S(d.left), SparseVec::unit(d.right)), d.coef);
      rr.add(A.multiply(SparseVec::unit(d.left), h.S(d.right)), d.coef);
    }
    SparseVec expect = A.unit().scaled(C.epsilon(t[0]));
    SparseVec lv = l.take();
    if (lv != expect) return "m(S⊗id)Δ = " + lv.to_string() + ", expected " + expect.to_string();
    SparseVec rv = rr.take();
    if (rv != expect) return "m(id⊗S)Δ = " + rv.to_string() + ", expected " + expect.to_string();
    return std::nullopt;
  }));
  return r;
}

// ---------------------------------------------------------------- constructions

StructuredAlgebra tensor_algebra(const StructuredAlgebra& a, const StructuredAlgebra& b) {
  int na = a.dim();
  int nb = b.dim();
  int n = na * nb;
  std::vector<SparseVec> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[static_cast<std::size_t>(i) * n + j] =
          tensor_vec(a.product(i / nb, j / nb), b.product(i % nb, j % nb), nb);
    }
  }
  return StructuredAlgebra(n, std::move(table), tensor_vec(a.unit(), b.unit(), nb),
                           a.label() + "⊗" + b.label());
}

CoalgebraData tensor_coalgebra(const CoalgebraData& c, const CoalgebraData& d) {
  int nc = c.dim();
  int nd = d.dim();
  std::vector<std::vector<CoTerm>> comult(nc * nd);
  std::vector<Scalar> counit(nc * nd);
  for (int i = 0; i < nc; ++i) {
    for (int j = 0; j < nd; ++j) {
      auto& terms = comult[i * nd + j];
      for (const auto& s : c.delta(i)) {
        for (const auto& t : d.delta(j)) {
          terms.push_back({s.left * nd + t.left, s.right * nd + t.right, s.coef * t.coef});
        }
      }
      counit[i * nd + j] = c.epsilon(i) * d.epsilon(j);
    }
  }
  return CoalgebraData(std::move(comult), std::move(counit));
}

HopfAlgebraData tensor_hopf(const HopfAlgebraData& h1, const HopfAlgebraData& h2) {
  int n1 = h1.dim();
  int n2 = h2.dim();
  std::vector<SparseVec> s(n1 * n2);
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) s[i * n2 + j] = tensor_vec(h1.S(i), h2.S(j), n2);
  }
  HopfAlgebraData h(h1.name() + "⊗" + h2.name(),
                    std::make_shared<StructuredAlgebra>(tensor_algebra(h1.algebra(), h2.algebra())),
                    std::make_shared<CoalgebraData>(tensor_coalgebra(h1.coalgebra(), h2.coalgebra())),
                    ExactMatrix::from_columns(n1 * n2, std::move(s)));
  h.basis_order = "lexicographic pairs (i, j) of the factor bases, index i*" + std::to_string(n2) + "+j";
  if (!h1.basis_labels.empty() && !h2.basis_labels.empty()) {
    for (int i = 0; i < n1; ++i) {
      for (int j = 0; j < n2; ++j) h.basis_labels.push_back(h1.basis_labels[i] + "⊗" + h2.basis_labels[j]);
    }
  }
  return h;
}

HopfAlgebraData dual_hopf(const HopfAlgebraData& h) {
  int n = h.dim();
  const auto& A = h.algebra();
  const auto& C = h.coalgebra();
  // p_i p_j = Σ_k <p_i ⊗ p_j, Δ e_k> p_k
  std::vector<Accumulator> acc(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    for (const auto& t : C.delta(k)) acc[static_cast<std::size_t>(t.left) * n + t.right].add(k, t.coef);
  }
  std::vector<SparseVec> table(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = acc[i].take();
  Accumulator unit;
  for (int k = 0; k < n; ++k) unit.add(k, C.epsilon(k));
  // Δ(p_k) = Σ_{i,j} <p_k, e_i e_j> p_i ⊗ p_j
  std::vector<std::vector<CoTerm>> comult(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (const auto& e : A.product(i, j)) comult[e.index].push_back({i, j, e.value});
    }
  }
  std::vector<Scalar> counit(n);
  for (const auto& e : A.unit()) counit[e.index] = e.value;
  HopfAlgebraData d(h.name() + "*",
                    std::make_shared<StructuredAlgebra>(n, std::move(table), unit.take(), A.label() + "*"),
                    std::make_shared<CoalgebraData>(std::move(comult), std::move(counit)), h.antipode().transpose());
  d.basis_order = "dual basis p_i of " + h.name() + " in its basis order";
  for (const auto& l : h.basis_labels) d.basis_labels.push_back("p[" + l + "]");
  return d;
}

HopfAlgebraData trivial_hopf() {
  HopfAlgebraData h("k", std::make_shared<StructuredAlgebra>(1, std::vector<SparseVec>{SparseVec::unit(0)},
                                                              SparseVec::unit(0), "k"),
                    std::make_shared<CoalgebraData>(std::vector<std::vector<CoTerm>>{{{0, 0, Scalar(1)}}},
                                                    std::vector<Scalar>{Scalar(1)}),
                    ExactMatrix::identity(1));
  h.basis_labels = {"1"};
  h.basis_order = "single basis vector 1";
  return h;
}

// ---------------------------------------------------------------- convolution

ConvolutionElement convolution_unit(CoalgebraPtr domain, AlgebraPtr codomain) {
  int n = domain->dim();
  std::vector<SparseVec> cols(n);
  for (int c = 0; c < n; ++c) cols[c] = codomain->unit().scaled(domain->epsilon(c));
  LinMap m({n}, ExactMatrix::from_columns(codomain->dim(), std::move(cols)));
  return {std::move(domain), std::move(codomain), std::move(m)};
}

ConvolutionElement convolution(const ConvolutionElement& f, const ConvolutionElement& g) {
  if (f.domain->dim() != g.domain->dim() || f.codomain->dim() != g.codomain->dim()) {
    throw Error(ErrorKind::ShapeMismatch, "convolution of maps with different shapes");
  }
  int n = f.domain->dim();
  const auto& A = *f.codomain;
  std::vector<SparseVec> cols(n);
  parallel_chunks(n, [&](int, int begin, int end) {
    for (int c = begin; c < end; ++c) {
      Accumulator acc;
      for (const auto& t : f.domain->delta(c)) acc.add(A.multiply(f(t.left), g(t.right)), t.coef);
      cols[c] = acc.take();
    }
  });
  return {f.domain, f.codomain, LinMap({n}, ExactMatrix::from_columns(A.dim(), std::move(cols)))};
}

bool same_values(const ConvolutionElement& f, const ConvolutionElement& g) { return f.map == g.map; }

std::vector<std::vector<int>> coalgebra_blocks(const CoalgebraData& c) {
  int n = c.dim();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (int i = 0; i < n; ++i) {
    for (const auto& t : c.delta(i)) {
      unite(i, t.left);
      unite(i, t.right);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

CheckResult check_convolution_central(const std::string& id, const std::string& description,
                                      const ConvolutionElement& f) {
  const auto& C = *f.domain;
  const auto& A = *f.codomain;
  // f * (δ_c a) evaluated at d is L_{d,c} a; (δ_c a) * f at d is a R_{d,c}.
  return check_all(id, description, {C.dim(), A.dim()}, [&](const int* t) -> std::optional<std::string> {
    int d = t[0];
    std::map<int, std::pair<Accumulator, Accumulator>> lr;
    for (const auto& term : C.delta(d)) {
      lr[term.right].first.add(f(term.left), term.coef);
      lr[term.left].second.add(f(term.right), term.coef);
    }
    SparseVec a = SparseVec::unit(t[1]);
    for (auto& [c, acc] : lr) {
      SparseVec L = acc.first.take();
      SparseVec R = acc.second.take();
      if (A.multiply(L, a) != A.multiply(a, R)) return "fails against test map concentrated at " + std::to_string(c);
    }
    return std::nullopt;
  });
}

CheckResult check_convolution_idempotent(const std::string& id, const std::string& description,
                                         const ConvolutionElement& f) {
  ConvolutionElement ff = convolution(f, f);
  return check_all(id, description, {f.domain->dim()}, [&](const int* t) -> std::optional<std::string> {
    if (ff(t[0]) == f(t[0])) return std::nullopt;
    return "f*f = " + ff(t[0]).to_string() + ", f = " + f(t[0]).to_string();
  });
}

ConvolutionElement convolution_inverse_in_ideal(const ConvolutionElement& omega, const ConvolutionElement& f1,
                                                const ConvolutionElement& f2) {
  for (const auto* f : {&f1, &f2}) {
    if (!check_convolution_idempotent("idempotent", "", *f).passed() ||
        !check_convolution_central("central", "", *f).passed()) {
      throw Error(ErrorKind::NotCentralIdempotent, "f1 and f2 must be central idempotents");
    }
  }
  ConvolutionElement E = convolution(f1, f2);
  if (!same_values(convolution(E, omega), omega) || !same_values(convolution(omega, E), omega)) {
    throw Error(ErrorKind::NotInIdeal, "omega is not in the ideal generated by f1*f2");
  }
  const auto& C = *omega.domain;
  const auto& A = *omega.codomain;
  int na = A.dim();
  auto blocks = coalgebra_blocks(C);
  std::vector<SparseVec> cols(C.dim());
  std::vector<std::string> errors(blocks.size());
  parallel_chunks(static_cast<int>(blocks.size()), [&](int, int begin, int end) {
    for (int bi = begin; bi < end; ++bi) {
      const auto& block = blocks[bi];
      int nb = static_cast<int>(block.size());
      std::map<int, int> pos;
      for (int k = 0; k < nb; ++k) pos[block[k]] = k;
      int unknowns = nb * na;
      std::vector<Accumulator> colacc(unknowns);
      std::vector<Accumulator> rhsacc(1);
      auto row = [&](int group, int d, int r) { return (group * nb + pos[d]) * na + r; };
      for (int d : block) {
        for (const auto& t : C.delta(d)) {
          for (int j = 0; j < na; ++j) {
            SparseVec aj = SparseVec::unit(j);
            for (const auto& e : A.multiply(omega(t.left), aj)) colacc[pos[t.right] * na + j].add(row(0, d, e.index), e.value * t.coef);
            for (const auto& e : A.multiply(aj, omega(t.right))) colacc[pos[t.left] * na + j].add(row(1, d, e.index), e.value * t.coef);
            for (const auto& e : A.multiply(E(t.left), aj)) colacc[pos[t.right] * na + j].add(row(2, d, e.index), e.value * t.coef);
          }
        }
        for (int j = 0; j < na; ++j) colacc[pos[d] * na + j].add(row(2, d, j), Scalar(-1));
        for (const auto& e : E(d)) {
          rhsacc[0].add(row(0, d, e.index), e.value);
          rhsacc[0].add(row(1, d, e.index), e.value);
        }
      }
      std::vector<SparseVec> mcols(unknowns);
      for (int u = 0; u < unknowns; ++u) mcols[u] = colacc[u].take();
      int rows = 3 * nb * na;
      ExactMatrix M = ExactMatrix::from_columns(rows, std::move(mcols));
      ExactMatrix rhs = ExactMatrix::from_columns(rows, {rhsacc[0].take()});
      SolveResult sol;
      try {
        sol = solve_linear(M, rhs);
      } catch (const Error&) {
        errors[bi] = "no inverse on the block of basis index " + std::to_string(block[0]);
        continue;
      }
      if (!sol.kernel_basis.empty()) {
        errors[bi] = "inverse not unique on the block of basis index " + std::to_string(block[0]);
        continue;
      }
      std::vector<std::vector<Entry>> vals(nb);
      for (const auto& e : sol.solution.column(0)) vals[e.index / na].push_back({e.index % na, e.value});
      for (int k = 0; k < nb; ++k) cols[block[k]] = SparseVec::from_sorted(std::move(vals[k]));
    }
  });
  for (const auto& e : errors) {
    if (!e.empty()) throw Error(ErrorKind::NotInvertible, e);
  }
  return {omega.domain, omega.codomain, LinMap({C.dim()}, ExactMatrix::from_columns(na, std::move(cols)))};
}

}  // namespace hp
