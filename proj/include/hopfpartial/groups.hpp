#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfpartial/report.hpp"
#include "hopfpartial/scalar.hpp"

namespace hp {

// Finite group given by its multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::vector<std::string> labels, std::vector<int> table);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup klein4();
  static FiniteGroup s3();
  static FiniteGroup q8();
  // "trivial", "z2", "z<n>", "klein4", "s3", "q8"
  static FiniteGroup preset(const std::string& name);
  // {"name": ..., "labels": [...], "table": [[...], ...]} or a preset name string.
  static FiniteGroup from_json(const Json& j);
  Json to_json() const;

  const std::string& name() const { return name_; }
  int order() const { return n_; }
  int identity() const { return 0; }
  int mul(int g, int h) const { return table_[g * n_ + h]; }
  int inv(int g) const { return inv_[g]; }
  const std::string& label(int g) const { return labels_[g]; }
  int index_of(const std::string& label) const;

  // Left regular representation: perm[g][j] = g j, embedding G into S_|G|.
  std::vector<std::vector<int>> regular_representation() const;

 private:
  std::string name_;
  int n_;
  std::vector<std::string> labels_;
  std::vector<int> table_;
  std::vector<int> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

class GroupSubset {
 public:
  GroupSubset(GroupPtr group, std::vector<int> members);
  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(int g) const { return pos_[g] >= 0; }
  // Position of g in the sorted member list, or -1.
  int position(int g) const { return pos_[g]; }
  bool is_subgroup() const { return subgroup_; }

 private:
  GroupPtr group_;
  std::vector<int> members_;
  std::vector<int> pos_;
  bool subgroup_;
};

// Scalar-valued function on G x G.
class GroupCocycleTable {
 public:
  GroupCocycleTable(GroupPtr group, std::vector<Scalar> values);

  static GroupCocycleTable trivial(GroupPtr group);
  // Normalized non-coboundary cocycle on the Klein four group with values ±1.
  static GroupCocycleTable klein_four(GroupPtr group);
  // Coboundary phi(g) phi(s) / phi(gs).
  static GroupCocycleTable coboundary(GroupPtr group, const std::vector<Scalar>& phi);
  // [[g, s, scalar], ...] with scalars in the JSON scalar encoding.
  static GroupCocycleTable from_json(GroupPtr group, const Json& j);
  Json to_json() const;

  const FiniteGroup& group() const { return *group_; }
  const Scalar& operator()(int g, int s) const { return values_[g * group_->order() + s]; }
  const std::vector<Scalar>& values() const { return values_; }
  std::vector<Scalar>& values() { return values_; }

  CheckResult check_cocycle_law() const;
  CheckResult check_normalized() const;
  CheckResult check_nonzero() const;
  bool is_normalized() const { return check_normalized().passed(); }
  // Exhaustive search for phi: G -> roots of unity of order 2|G| with
  // phi(e) = 1 realizing the table as a coboundary. Only tables whose values
  // are roots of unity of order dividing 2|G| can be realized this way.
  bool is_coboundary() const;

 private:
  GroupPtr group_;
  std::vector<Scalar> values_;
};

}  // namespace hp
