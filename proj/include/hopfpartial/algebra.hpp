#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hopfpartial/linalg.hpp"
#include "hopfpartial/report.hpp"

namespace hp {

class FiniteGroup;

// Linear map from V_1 ⊗ ... ⊗ V_p to W. Column index of a basis tuple is
// row-major over source_dims.
class LinMap {
 public:
  LinMap() = default;
  LinMap(std::vector<int> source_dims, int target_dim);
  LinMap(std::vector<int> source_dims, ExactMatrix matrix);

  const std::vector<int>& source_dims() const { return source_dims_; }
  int target_dim() const { return matrix_.rows(); }
  int source_size() const { return matrix_.cols(); }
  const ExactMatrix& matrix() const { return matrix_; }
  ExactMatrix& matrix() { return matrix_; }

  int flat(int i, int j) const { return i * source_dims_[1] + j; }
  const SparseVec& at(int i) const { return matrix_.column(i); }
  const SparseVec& at(int i, int j) const { return matrix_.column(flat(i, j)); }
  SparseVec& column(int c) { return matrix_.column(c); }

  SparseVec apply(const SparseVec& x) const;
  SparseVec apply(const SparseVec& x, const SparseVec& y) const;
  SparseVec apply(int i, const SparseVec& y) const;

  friend bool operator==(const LinMap& a, const LinMap& b) {
    return a.source_dims_ == b.source_dims_ && a.matrix_ == b.matrix_;
  }

 private:
  std::vector<int> source_dims_;
  ExactMatrix matrix_;
};

// Finite-dimensional unital algebra. Products come either from a stored
// table or from a callback (used for crossed products whose full table is
// too large to keep).
class StructuredAlgebra {
 public:
  using ProductFn = std::function<SparseVec(int, int)>;

  StructuredAlgebra(int dim, std::vector<SparseVec> table, SparseVec unit, std::string label = {});
  StructuredAlgebra(int dim, ProductFn product, SparseVec unit, std::string label = {});

  int dim() const { return dim_; }
  const SparseVec& unit() const { return unit_; }
  const std::string& label() const { return label_; }
  bool has_table() const { return !table_.empty() || dim_ == 0; }

  SparseVec product(int i, int j) const;
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  SparseVec multiply(const SparseVec& x, const SparseVec& y, const SparseVec& z) const {
    return multiply(multiply(x, y), z);
  }
  // Left multiplication by x as a matrix on A.
  ExactMatrix left_mult_matrix(const SparseVec& x) const;
  ExactMatrix right_mult_matrix(const SparseVec& x) const;
  const std::vector<SparseVec>& table() const { return table_; }

 private:
  int dim_;
  std::vector<SparseVec> table_;  // index i * dim + j
  ProductFn fn_;
  SparseVec unit_;
  std::string label_;
};

using AlgebraPtr = std::shared_ptr<const StructuredAlgebra>;

struct CoTerm {
  int left;
  int right;
  Scalar coef;
};

class CoalgebraData {
 public:
  CoalgebraData() = default;
  CoalgebraData(std::vector<std::vector<CoTerm>> comult, std::vector<Scalar> counit);

  int dim() const { return static_cast<int>(comult_.size()); }
  const std::vector<CoTerm>& delta(int i) const { return comult_[i]; }
  const Scalar& epsilon(int i) const { return counit_[i]; }
  const std::vector<Scalar>& counit() const { return counit_; }
  Scalar epsilon(const SparseVec& x) const;
  // Δ(x) flattened into dim x dim.
  SparseVec delta_vec(const SparseVec& x) const;

 private:
  std::vector<std::vector<CoTerm>> comult_;
  std::vector<Scalar> counit_;
};

using CoalgebraPtr = std::shared_ptr<const CoalgebraData>;

constexpr int kMaxLegs = 6;

struct SweedlerTerm {
  std::array<int, kMaxLegs> idx;
  Scalar coef;
};

// Basis index = outer * inner_dim + inner for products built over a group
// algebra; lets constructions recover the group element of a basis vector.
struct SmashLayout {
  int outer_dim = 0;
  int inner_dim = 0;
  std::shared_ptr<const FiniteGroup> group;
  int group_element(int basis) const { return basis % inner_dim; }
  int outer_index(int basis) const { return basis / inner_dim; }
};

class HopfAlgebraData {
 public:
  HopfAlgebraData(std::string name, AlgebraPtr algebra, CoalgebraPtr coalgebra, ExactMatrix antipode);
  HopfAlgebraData(const HopfAlgebraData& o);
  HopfAlgebraData& operator=(const HopfAlgebraData&) = delete;

  const std::string& name() const { return name_; }
  int dim() const { return algebra_->dim(); }
  const StructuredAlgebra& algebra() const { return *algebra_; }
  const CoalgebraData& coalgebra() const { return *coalgebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const CoalgebraPtr& coalgebra_ptr() const { return coalgebra_; }
  const ExactMatrix& antipode() const { return antipode_; }
  const SparseVec& S(int i) const { return antipode_.column(i); }
  const SparseVec& unit() const { return algebra_->unit(); }

  // Index of the unit when 1_H is a basis vector, else -1.
  int unit_index() const { return unit_index_; }
  // True when every basis vector is grouplike.
  bool grouplike_basis() const { return grouplike_; }

  // Δ^{(legs)}(e_i) with duplicate index tuples merged, tuples ascending.
  const std::vector<SweedlerTerm>& sweedler(int i, int legs) const;

  std::optional<SmashLayout> smash;
  std::vector<std::string> basis_labels;
  std::string basis_order;  // description recorded in reports

  HopfAlgebraData with_antipode(ExactMatrix s) const;

 private:
  std::string name_;
  AlgebraPtr algebra_;
  CoalgebraPtr coalgebra_;
  ExactMatrix antipode_;
  int unit_index_ = -1;
  bool grouplike_ = false;

  struct Cache {
    std::mutex mu;
    std::map<int, std::unique_ptr<std::vector<std::vector<SweedlerTerm>>>> by_legs;
  };
  mutable std::unique_ptr<Cache> cache_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebraData>;

// Checks every algebra, coalgebra, bialgebra and antipode law on the basis.
Report validate_hopf(const HopfAlgebraData& h);
Report validate_algebra(const StructuredAlgebra& a, const std::string& prefix = "algebra.");

// a ⊗ b with index i*dimb + j.
SparseVec tensor_vec(const SparseVec& a, const SparseVec& b, int dimb);
StructuredAlgebra tensor_algebra(const StructuredAlgebra& a, const StructuredAlgebra& b);
CoalgebraData tensor_coalgebra(const CoalgebraData& c, const CoalgebraData& d);
HopfAlgebraData tensor_hopf(const HopfAlgebraData& h1, const HopfAlgebraData& h2);
HopfAlgebraData dual_hopf(const HopfAlgebraData& h);
HopfAlgebraData trivial_hopf();
LinMap iterated_comult(const HopfAlgebraData& h, int legs);

// Element of Hom(C, A) under the convolution product.
struct ConvolutionElement {
  CoalgebraPtr domain;
  AlgebraPtr codomain;
  LinMap map;

  const SparseVec& operator()(int c) const { return map.at(c); }
};

ConvolutionElement convolution_unit(CoalgebraPtr domain, AlgebraPtr codomain);
ConvolutionElement convolution(const ConvolutionElement& f, const ConvolutionElement& g);
bool same_values(const ConvolutionElement& f, const ConvolutionElement& g);

// Classes of basis indices linked by comultiplication terms; Hom(C, A)
// decomposes into independent blocks along them.
std::vector<std::vector<int>> coalgebra_blocks(const CoalgebraData& c);

// f commutes under convolution with every element of Hom(C, A).
CheckResult check_convolution_central(const std::string& id, const std::string& description,
                                      const ConvolutionElement& f);
CheckResult check_convolution_idempotent(const std::string& id, const std::string& description,
                                         const ConvolutionElement& f);

// Unique ω' in the ideal generated by E = f1 * f2 with ω*ω' = ω'*ω = E.
ConvolutionElement convolution_inverse_in_ideal(const ConvolutionElement& omega, const ConvolutionElement& f1,
                                                const ConvolutionElement& f2);

}  // namespace hp
