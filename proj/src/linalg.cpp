#include "hopfpartial/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace hp {

SparseVec SparseVec::unit(int i) { return single(i, Scalar(1)); }

SparseVec SparseVec::single(int i, Scalar c) {
  SparseVec v;
  if (!c.is_zero()) v.e_.push_back({i, std::move(c)});
  return v;
}

SparseVec SparseVec::from_sorted(std::vector<Entry> entries) {
  SparseVec v;
  v.e_ = std::move(entries);
  return v;
}

const Scalar* SparseVec::find(int i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), i, [](const Entry& e, int k) { return e.index < k; });
  if (it == e_.end() || it->index != i) return nullptr;
  return &it->value;
}

Scalar SparseVec::get(int i) const {
  const Scalar* s = find(i);
  return s ? *s : Scalar();
}

SparseVec SparseVec::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  SparseVec out = *this;
  if (c.is_one()) return out;
  for (auto& e : out.e_) e.value *= c;
  return out;
}

void SparseVec::axpy(const Scalar& c, const SparseVec& x) {
  if (c.is_zero() || x.is_zero()) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + x.e_.size());
  auto a = e_.begin();
  auto b = x.e_.begin();
  while (a != e_.end() || b != x.e_.end()) {
    if (b == x.e_.end() || (a != e_.end() && a->index < b->index)) {
      out.push_back(std::move(*a++));
    } else if (a == e_.end() || b->index < a->index) {
      out.push_back({b->index, b->value * c});
      ++b;
    } else {
      Scalar s = std::move(a->value);
      s.add_product(b->value, c);
      if (!s.is_zero()) out.push_back({a->index, std::move(s)});
      ++a;
      ++b;
    }
  }
  e_ = std::move(out);
}

SparseVec& SparseVec::operator+=(const SparseVec& x) {
  axpy(Scalar(1), x);
  return *this;
}

SparseVec& SparseVec::operator-=(const SparseVec& x) {
  axpy(Scalar(-1), x);
  return *this;
}

bool operator==(const SparseVec& a, const SparseVec& b) {
  if (a.e_.size() != b.e_.size()) return false;
  for (std::size_t i = 0; i < a.e_.size(); ++i) {
    if (a.e_[i].index != b.e_[i].index || a.e_[i].value != b.e_[i].value) return false;
  }
  return true;
}

std::string SparseVec::to_string() const {
  if (e_.empty()) return "0";
  std::string out;
  for (const auto& e : e_) {
    if (!out.empty()) out += " + ";
    out += "(" + e.value.to_string() + ")e" + std::to_string(e.index);
  }
  return out;
}

void Accumulator::add(const SparseVec& v) {
  for (const auto& e : v) t_.push_back(e);
}

void Accumulator::add(const SparseVec& v, const Scalar& c) {
  if (c.is_zero()) return;
  if (c.is_one()) return add(v);
  for (const auto& e : v) t_.push_back({e.index, e.value * c});
}

SparseVec Accumulator::take() {
  std::stable_sort(t_.begin(), t_.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  std::vector<Entry> out;
  out.reserve(t_.size());
  for (auto& e : t_) {
    if (!out.empty() && out.back().index == e.index) {
      out.back().value += e.value;
    } else {
      if (!out.empty() && out.back().value.is_zero()) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && out.back().value.is_zero()) out.pop_back();
  t_.clear();
  return SparseVec::from_sorted(std::move(out));
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.columns_[i] = SparseVec::unit(i);
  return m;
}

ExactMatrix ExactMatrix::from_columns(int rows, std::vector<SparseVec> cols) {
  ExactMatrix m;
  m.rows_ = rows;
  m.cols_ = static_cast<int>(cols.size());
  m.columns_ = std::move(cols);
  for (const auto& c : m.columns_) {
    if (!c.is_zero() && (c.entries().front().index < 0 || c.entries().back().index >= rows)) {
      throw Error(ErrorKind::ShapeMismatch, "column entry outside row range");
    }
  }
  return m;
}

void ExactMatrix::set(int r, int c, const Scalar& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw Error(ErrorKind::ShapeMismatch, "index out of range");
  Scalar cur = columns_[c].get(r);
  columns_[c].axpy(Scalar(1), SparseVec::single(r, v - cur));
}

std::size_t ExactMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.nnz();
  return n;
}

SparseVec ExactMatrix::apply(const SparseVec& x) const {
  Accumulator acc;
  for (const auto& e : x) {
    if (e.index >= cols_) throw Error(ErrorKind::ShapeMismatch, "vector longer than matrix width");
    acc.add(columns_[e.index], e.value);
  }
  return acc.take();
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::ShapeMismatch, "matrix product dimensions");
  ExactMatrix out(rows_, o.cols_);
  for (int c = 0; c < o.cols_; ++c) out.columns_[c] = apply(o.columns_[c]);
  return out;
}

std::vector<SparseVec> ExactMatrix::rows_as_vectors() const {
  std::vector<std::vector<Entry>> rows(rows_);
  for (int c = 0; c < cols_; ++c) {
    for (const auto& e : columns_[c]) rows[e.index].push_back({c, e.value});
  }
  std::vector<SparseVec> out;
  out.reserve(rows_);
  for (auto& r : rows) out.push_back(SparseVec::from_sorted(std::move(r)));
  return out;
}

ExactMatrix ExactMatrix::transpose() const { return from_columns(cols_, rows_as_vectors()); }

std::optional<SparseVec> Subspace::coordinates(const SparseVec& v) const {
  std::vector<Entry> coords;
  if (unit_basis_) {
    coords.reserve(v.nnz());
    for (const auto& e : v) {
      if (e.index >= ambient_) return std::nullopt;
      int slot = pivot_slot_[e.index];
      if (slot < 0) return std::nullopt;
      coords.push_back({slot, e.value});
    }
    // pivots ascend with slots, so coords are already sorted
    return SparseVec::from_sorted(std::move(coords));
  }
  for (const auto& e : v) {
    if (e.index >= ambient_) return std::nullopt;
    int slot = pivot_slot_[e.index];
    if (slot >= 0) coords.push_back({slot, e.value});
  }
  SparseVec c = SparseVec::from_sorted(std::move(coords));
  if (embed(c) != v) return std::nullopt;
  return c;
}

SparseVec Subspace::embed(const SparseVec& coords) const {
  if (unit_basis_) {
    std::vector<Entry> out;
    out.reserve(coords.nnz());
    for (const auto& e : coords) out.push_back({pivots_[e.index], e.value});
    return SparseVec::from_sorted(std::move(out));
  }
  Accumulator acc;
  for (const auto& e : coords) acc.add(basis_[e.index], e.value);
  return acc.take();
}

SubspaceBuilder::SubspaceBuilder(int ambient) : ambient_(ambient), row_of_col_(ambient, -1) {}

SparseVec SubspaceBuilder::reduce(const SparseVec& v) const {
  // Rows are mutually reduced, so one pass over v's pivot entries suffices.
  SparseVec out = v;
  for (const auto& e : v) {
    int r = row_of_col_[e.index];
    if (r >= 0) out.axpy(-e.value, rows_[r]);
  }
  return out;
}

bool SubspaceBuilder::insert(const SparseVec& v) {
  if (!v.is_zero() && v.entries().back().index >= ambient_) {
    throw Error(ErrorKind::ShapeMismatch, "vector outside ambient space");
  }
  SparseVec w = reduce(v);
  if (w.is_zero()) return false;
  int p = w.entries().front().index;
  w = w.scaled(w.entries().front().value.inverse());
  for (auto& row : rows_) {
    const Scalar* c = row.find(p);
    if (c) {
      Scalar f = -*c;
      row.axpy(f, w);
    }
  }
  row_of_col_[p] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(w));
  pivot_.push_back(p);
  return true;
}

Subspace SubspaceBuilder::build() const {
  Subspace s;
  s.ambient_ = ambient_;
  std::vector<int> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pivot_[a] < pivot_[b]; });
  s.pivot_slot_.assign(ambient_, -1);
  for (int r : order) {
    s.pivot_slot_[pivot_[r]] = static_cast<int>(s.basis_.size());
    s.basis_.push_back(rows_[r]);
    s.pivots_.push_back(pivot_[r]);
    if (rows_[r].nnz() != 1) s.unit_basis_ = false;
  }
  return s;
}

Subspace span(int ambient, const std::vector<SparseVec>& generators) {
  SubspaceBuilder b(ambient);
  for (const auto& g : generators) b.insert(g);
  return b.build();
}

namespace {

// Echelon form of the augmented system [m | rhs], rows in original order.
SubspaceBuilder eliminate(const ExactMatrix& m, const ExactMatrix* rhs) {
  int extra = rhs ? rhs->cols() : 0;
  std::vector<SparseVec> mrows = m.rows_as_vectors();
  std::vector<SparseVec> rrows;
  if (rhs) rrows = rhs->rows_as_vectors();
  SubspaceBuilder b(m.cols() + extra);
  for (int r = 0; r < m.rows(); ++r) {
    if (!rhs || rrows[r].is_zero()) {
      b.insert(mrows[r]);
      continue;
    }
    std::vector<Entry> row(mrows[r].begin(), mrows[r].end());
    for (const auto& e : rrows[r]) row.push_back({m.cols() + e.index, e.value});
    b.insert(SparseVec::from_sorted(std::move(row)));
  }
  return b;
}

std::vector<SparseVec> kernel_from(const SubspaceBuilder& b, int cols) {
  std::vector<bool> is_pivot(cols, false);
  for (int p : b.row_pivots()) {
    if (p < cols) is_pivot[p] = true;
  }
  std::vector<std::vector<Entry>> ker(cols);
  for (int f = 0; f < cols; ++f) {
    if (!is_pivot[f]) ker[f].push_back({f, Scalar(1)});
  }
  for (std::size_t r = 0; r < b.rows().size(); ++r) {
    int p = b.row_pivots()[r];
    if (p >= cols) continue;
    for (const auto& e : b.rows()[r]) {
      if (e.index >= cols || e.index == p) continue;
      ker[e.index].push_back({p, -e.value});
    }
  }
  std::vector<SparseVec> out;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    auto& k = ker[f];
    std::sort(k.begin(), k.end(), [](const Entry& a, const Entry& c) { return a.index < c.index; });
    out.push_back(SparseVec::from_sorted(std::move(k)));
  }
  return out;
}

}  // namespace

SolveResult solve_linear(const ExactMatrix& m, const ExactMatrix& rhs) {
  if (m.rows() != rhs.rows()) throw Error(ErrorKind::ShapeMismatch, "rhs row count differs from matrix");
  SubspaceBuilder b = eliminate(m, &rhs);
  int cols = m.cols();
  std::vector<std::vector<Entry>> sol(rhs.cols());
  for (std::size_t r = 0; r < b.rows().size(); ++r) {
    int p = b.row_pivots()[r];
    if (p >= cols) throw Error(ErrorKind::NoSolution, "right-hand side outside the column space");
    for (const auto& e : b.rows()[r]) {
      if (e.index >= cols) sol[e.index - cols].push_back({p, e.value});
    }
  }
  std::vector<SparseVec> solcols;
  for (auto& s : sol) {
    std::sort(s.begin(), s.end(), [](const Entry& a, const Entry& c) { return a.index < c.index; });
    solcols.push_back(SparseVec::from_sorted(std::move(s)));
  }
  return {ExactMatrix::from_columns(cols, std::move(solcols)), kernel_from(b, cols)};
}

std::vector<SparseVec> kernel(const ExactMatrix& m) { return kernel_from(eliminate(m, nullptr), m.cols()); }

int rank(const ExactMatrix& m) {
  SubspaceBuilder b(m.rows());
  for (const auto& c : m.columns()) b.insert(c);
  return b.dim();
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NotInvertible, "matrix is not square");
  SolveResult r;
  try {
    r = solve_linear(m, ExactMatrix::identity(m.rows()));
  } catch (const Error&) {
    throw Error(ErrorKind::NotInvertible, "matrix is singular");
  }
  if (!r.kernel_basis.empty()) throw Error(ErrorKind::NotInvertible, "matrix is singular");
  return r.solution;
}

}  // namespace hp
