#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfpartial/scalar.hpp"

namespace hp {

struct Entry {
  int index;
  Scalar value;
};

// Sparse vector with entries sorted by index and no stored zeros.
class SparseVec {
 public:
  SparseVec() = default;
  static SparseVec unit(int i);
  static SparseVec single(int i, Scalar c);
  // Entries must be sorted by index and nonzero.
  static SparseVec from_sorted(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return e_; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  bool is_zero() const { return e_.empty(); }
  std::size_t nnz() const { return e_.size(); }
  const Scalar* find(int i) const;
  Scalar get(int i) const;

  SparseVec scaled(const Scalar& c) const;
  // this += c * x
  void axpy(const Scalar& c, const SparseVec& x);
  SparseVec& operator+=(const SparseVec& x);
  SparseVec& operator-=(const SparseVec& x);
  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend bool operator==(const SparseVec& a, const SparseVec& b);
  friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::vector<Entry> e_;
};

// Collects unsorted terms; take() merges duplicates and drops zeros.
class Accumulator {
 public:
  void add(int i, const Scalar& c) {
    if (!c.is_zero()) t_.push_back({i, c});
  }
  void add(const SparseVec& v);
  void add(const SparseVec& v, const Scalar& c);
  bool empty() const { return t_.empty(); }
  SparseVec take();

 private:
  std::vector<Entry> t_;
};

// rows x cols matrix stored as sparse columns.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), columns_(cols) {}
  static ExactMatrix identity(int n);
  static ExactMatrix from_columns(int rows, std::vector<SparseVec> cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const SparseVec& column(int c) const { return columns_[c]; }
  SparseVec& column(int c) { return columns_[c]; }
  const std::vector<SparseVec>& columns() const { return columns_; }
  Scalar at(int r, int c) const { return columns_[c].get(r); }
  void set(int r, int c, const Scalar& v);
  std::size_t nnz() const;

  SparseVec apply(const SparseVec& x) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix transpose() const;
  std::vector<SparseVec> rows_as_vectors() const;
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseVec> columns_;
};

// Subspace of k^n held as its reduced row echelon basis, which is unique for
// the subspace and therefore independent of generator order.
class Subspace {
 public:
  Subspace() = default;
  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<SparseVec>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  bool has_unit_basis() const { return unit_basis_; }

  // Coordinates in the echelon basis, or nullopt when v is outside.
  std::optional<SparseVec> coordinates(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return coordinates(v).has_value(); }
  SparseVec embed(const SparseVec& coords) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  friend class SubspaceBuilder;
  int ambient_ = 0;
  std::vector<SparseVec> basis_;
  std::vector<int> pivots_;
  std::vector<int> pivot_slot_;  // ambient index -> basis position or -1
  bool unit_basis_ = true;
};

class SubspaceBuilder {
 public:
  explicit SubspaceBuilder(int ambient);
  // Returns true when v enlarged the span.
  bool insert(const SparseVec& v);
  int dim() const { return static_cast<int>(rows_.size()); }
  // Rows in insertion order, each normalized to 1 at its pivot.
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<int>& row_pivots() const { return pivot_; }
  Subspace build() const;

 private:
  SparseVec reduce(const SparseVec& v) const;
  int ambient_;
  std::vector<SparseVec> rows_;
  std::vector<int> pivot_;
  std::vector<int> row_of_col_;
};

Subspace span(int ambient, const std::vector<SparseVec>& generators);

struct SolveResult {
  ExactMatrix solution;
  std::vector<SparseVec> kernel_basis;
};

// Solves M x = rhs column by column; free variables are set to zero.
SolveResult solve_linear(const ExactMatrix& m, const ExactMatrix& rhs);
std::vector<SparseVec> kernel(const ExactMatrix& m);
int rank(const ExactMatrix& m);
ExactMatrix inverse(const ExactMatrix& m);

}  // namespace hp
