#include "hopfpartial/groups.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hopfpartial/serialize.hpp"

namespace hp {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> labels, std::vector<int> table)
    : name_(std::move(name)), n_(static_cast<int>(labels.size())), labels_(std::move(labels)), table_(std::move(table)) {
  if (n_ < 1) throw Error(ErrorKind::InvalidGroup, "group must be nonempty");
  if (static_cast<long long>(table_.size()) != static_cast<long long>(n_) * n_) {
    throw Error(ErrorKind::InvalidGroup, "multiplication table must be order x order");
  }
  for (int x : table_) {
    if (x < 0 || x >= n_) throw Error(ErrorKind::InvalidGroup, "table entry out of range");
  }
  for (int g = 0; g < n_; ++g) {
    if (mul(0, g) != g || mul(g, 0) != g) throw Error(ErrorKind::InvalidGroup, "element 0 is not the identity");
  }
  for (int g = 0; g < n_; ++g) {
    for (int h = 0; h < n_; ++h) {
      for (int k = 0; k < n_; ++k) {
        if (mul(mul(g, h), k) != mul(g, mul(h, k))) {
          throw Error(ErrorKind::InvalidGroup, "table is not associative at (" + labels_[g] + ", " + labels_[h] + ", " +
                                                   labels_[k] + ")");
        }
      }
    }
  }
  inv_.assign(n_, -1);
  for (int g = 0; g < n_; ++g) {
    for (int h = 0; h < n_; ++h) {
      if (mul(g, h) == 0 && mul(h, g) == 0) inv_[g] = h;
    }
    if (inv_[g] < 0) throw Error(ErrorKind::InvalidGroup, "element " + labels_[g] + " has no inverse");
  }
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup("trivial", {"e"}, {0}); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidGroup, "cyclic group order must be positive");
  std::vector<std::string> labels;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g) {
    labels.push_back(g == 0 ? "e" : (g == 1 ? "a" : "a^" + std::to_string(g)));
    for (int h = 0; h < n; ++h) table[g * n + h] = (g + h) % n;
  }
  return FiniteGroup("z" + std::to_string(n), labels, table);
}

FiniteGroup FiniteGroup::klein4() {
  std::vector<int> table(16);
  for (int g = 0; g < 4; ++g) {
    for (int h = 0; h < 4; ++h) table[g * 4 + h] = g ^ h;
  }
  return FiniteGroup("klein4", {"e", "a", "b", "ab"}, table);
}

FiniteGroup FiniteGroup::s3() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p = {0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::vector<int>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::string> labels;
  std::vector<int> table(36);
  for (int g = 0; g < 6; ++g) {
    labels.push_back("[" + std::to_string(perms[g][0]) + std::to_string(perms[g][1]) + std::to_string(perms[g][2]) + "]");
    for (int h = 0; h < 6; ++h) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[g][perms[h][i]];
      table[g * 6 + h] = index(c);
    }
  }
  return FiniteGroup("s3", labels, table);
}

FiniteGroup FiniteGroup::q8() {
  // index 2u + s with unit u in {1, i, j, k} and sign bit s
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const char* names[4] = {"1", "i", "j", "k"};
  std::vector<std::string> labels;
  std::vector<int> table(64);
  for (int g = 0; g < 8; ++g) {
    labels.push_back(std::string(g % 2 ? "-" : "") + names[g / 2]);
    for (int h = 0; h < 8; ++h) {
      int u = unit_mul[g / 2][h / 2];
      int s = (g % 2) ^ (h % 2) ^ sign_mul[g / 2][h / 2];
      table[g * 8 + h] = 2 * u + s;
    }
  }
  return FiniteGroup("q8", labels, table);
}

FiniteGroup FiniteGroup::preset(const std::string& name) {
  if (name == "trivial") return trivial();
  if (name == "klein4") return klein4();
  if (name == "s3") return s3();
  if (name == "q8") return q8();
  if (name.size() > 1 && name[0] == 'z' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
    return cyclic(std::stoi(name.substr(1)));
  }
  throw Error(ErrorKind::Config, "unknown group preset '" + name + "'");
}

FiniteGroup FiniteGroup::from_json(const Json& j) {
  if (j.is_string()) return preset(j.get<std::string>());
  try {
    const auto& rows = j.at("table");
    int n = static_cast<int>(rows.size());
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<std::string>>();
    } else {
      for (int g = 0; g < n; ++g) labels.push_back("g" + std::to_string(g));
    }
    if (static_cast<int>(labels.size()) != n) throw Error(ErrorKind::InvalidGroup, "label count differs from order");
    std::vector<int> table;
    for (const auto& r : rows) {
      auto v = r.get<std::vector<int>>();
      if (static_cast<int>(v.size()) != n) throw Error(ErrorKind::InvalidGroup, "table row length differs from order");
      table.insert(table.end(), v.begin(), v.end());
    }
    return FiniteGroup(j.value("name", std::string("custom")), labels, table);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("group: ") + e.what());
  }
}

Json FiniteGroup::to_json() const {
  Json rows = Json::array();
  for (int g = 0; g < n_; ++g) rows.push_back(std::vector<int>(table_.begin() + g * n_, table_.begin() + (g + 1) * n_));
  return {{"name", name_}, {"labels", labels_}, {"table", rows}};
}

int FiniteGroup::index_of(const std::string& label) const {
  for (int g = 0; g < n_; ++g) {
    if (labels_[g] == label) return g;
  }
  throw Error(ErrorKind::Config, "group " + name_ + " has no element '" + label + "'");
}

std::vector<std::vector<int>> FiniteGroup::regular_representation() const {
  std::vector<std::vector<int>> perm(n_, std::vector<int>(n_));
  for (int g = 0; g < n_; ++g) {
    for (int j = 0; j < n_; ++j) perm[g][j] = mul(g, j);
  }
  return perm;
}

// ---------------------------------------------------------------- subsets

GroupSubset::GroupSubset(GroupPtr group, std::vector<int> members) : group_(std::move(group)), members_(std::move(members)) {
  int n = group_->order();
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) throw Error(ErrorKind::Config, "subset must be nonempty");
  pos_.assign(n, -1);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 0 || members_[i] >= n) throw Error(ErrorKind::Config, "subset member out of range");
    pos_[members_[i]] = static_cast<int>(i);
  }
  subgroup_ = contains(group_->identity());
  for (int g : members_) {
    if (!contains(group_->inv(g))) subgroup_ = false;
    for (int h : members_) {
      if (!contains(group_->mul(g, h))) subgroup_ = false;
    }
  }
}

// ---------------------------------------------------------------- cocycles

GroupCocycleTable::GroupCocycleTable(GroupPtr group, std::vector<Scalar> values)
    : group_(std::move(group)), values_(std::move(values)) {
  int n = group_->order();
  if (static_cast<long long>(values_.size()) != static_cast<long long>(n) * n) {
    throw Error(ErrorKind::ShapeMismatch, "cocycle table must have order^2 values");
  }
}

GroupCocycleTable GroupCocycleTable::trivial(GroupPtr group) {
  int n = group->order();
  return GroupCocycleTable(std::move(group), std::vector<Scalar>(static_cast<std::size_t>(n) * n, Scalar(1)));
}

GroupCocycleTable GroupCocycleTable::klein_four(GroupPtr group) {
  if (group->order() != 4 || group->mul(1, 2) != 3 || group->mul(1, 1) != 0 || group->mul(2, 2) != 0) {
    throw Error(ErrorKind::InvalidGroup, "Klein four cocycle needs the klein4 group (e, a, b, ab)");
  }
  const int e = 0, a = 1, b = 2, ab = 3;
  std::vector<Scalar> v(16, Scalar(1));
  for (auto [g, s] : {std::pair{a, a}, {a, ab}, {b, a}, {b, b}, {ab, b}, {ab, ab}}) v[g * 4 + s] = Scalar(-1);
  for (auto [g, s] : {std::pair{a, b}, {b, ab}, {ab, a}}) v[g * 4 + s] = Scalar(1);
  for (int g = 0; g < 4; ++g) v[g * 4 + e] = v[e * 4 + g] = Scalar(1);
  return GroupCocycleTable(std::move(group), std::move(v));
}

GroupCocycleTable GroupCocycleTable::coboundary(GroupPtr group, const std::vector<Scalar>& phi) {
  int n = group->order();
  if (static_cast<int>(phi.size()) != n) throw Error(ErrorKind::ShapeMismatch, "phi must have one value per element");
  std::vector<Scalar> v(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g) {
    for (int s = 0; s < n; ++s) v[g * n + s] = phi[g] * phi[s] / phi[group->mul(g, s)];
  }
  return GroupCocycleTable(std::move(group), std::move(v));
}

GroupCocycleTable GroupCocycleTable::from_json(GroupPtr group, const Json& j) {
  int n = group->order();
  std::vector<Scalar> v(static_cast<std::size_t>(n) * n, Scalar(1));
  for (const auto& e : j) {
    int g = e.at(0).is_string() ? group->index_of(e.at(0).get<std::string>()) : e.at(0).get<int>();
    int s = e.at(1).is_string() ? group->index_of(e.at(1).get<std::string>()) : e.at(1).get<int>();
    if (g < 0 || g >= n || s < 0 || s >= n) throw Error(ErrorKind::Parse, "cocycle index out of range");
    v[g * n + s] = scalar_from_json(e.at(2));
  }
  return GroupCocycleTable(std::move(group), std::move(v));
}

Json GroupCocycleTable::to_json() const {
  Json a = Json::array();
  int n = group_->order();
  for (int g = 0; g < n; ++g) {
    for (int s = 0; s < n; ++s) a.push_back({group_->label(g), group_->label(s), scalar_to_json((*this)(g, s))});
  }
  return a;
}

CheckResult GroupCocycleTable::check_cocycle_law() const {
  int n = group_->order();
  const auto& G = *group_;
  return check_all("group_cocycle.law", "γ(x,y)γ(xy,z) = γ(x,yz)γ(y,z)", {n, n, n},
                   [&](const int* t) -> std::optional<std::string> {
                     int x = t[0], y = t[1], z = t[2];
                     Scalar l = (*this)(x, y) * (*this)(G.mul(x, y), z);
                     Scalar r = (*this)(x, G.mul(y, z)) * (*this)(y, z);
                     if (l == r) return std::nullopt;
                     return "lhs = " + l.to_string() + "; rhs = " + r.to_string();
                   });
}

CheckResult GroupCocycleTable::check_normalized() const {
  int n = group_->order();
  return check_all("group_cocycle.normalized", "γ(g,1) = γ(1,g) = 1", {n}, [&](const int* t) -> std::optional<std::string> {
    if ((*this)(t[0], 0).is_one() && (*this)(0, t[0]).is_one()) return std::nullopt;
    return "γ(g,1) = " + (*this)(t[0], 0).to_string() + ", γ(1,g) = " + (*this)(0, t[0]).to_string();
  });
}

CheckResult GroupCocycleTable::check_nonzero() const {
  int n = group_->order();
  return check_all("group_cocycle.nonzero", "every value is invertible", {n, n},
                   [&](const int* t) -> std::optional<std::string> {
                     if (!(*this)(t[0], t[1]).is_zero()) return std::nullopt;
                     return "zero value";
                   });
}

bool GroupCocycleTable::is_coboundary() const {
  const auto& G = *group_;
  int n = G.order();
  int m = 2 * n;
  std::vector<Scalar> roots(m);
  for (int k = 0; k < m; ++k) roots[k] = Scalar::root_of_unity(m, k);
  std::vector<Scalar> phi(n);
  std::vector<bool> set(n, false);
  phi[0] = (*this)(0, 0);  // γ(e,e) = φ(e)
  set[0] = true;
  if (phi[0].is_zero()) return false;
  // consistent(g): every relation among assigned elements holds
  auto consistent = [&](int g) {
    for (int s = 0; s < n; ++s) {
      if (!set[s]) continue;
      for (auto [x, y] : {std::pair{g, s}, std::pair{s, g}}) {
        int xy = G.mul(x, y);
        if (!set[xy]) continue;
        if ((*this)(x, y) * phi[xy] != phi[x] * phi[y]) return false;
      }
    }
    return true;
  };
  if (!consistent(0)) return false;
  std::function<bool(int)> search = [&](int g) {
    if (g == n) return true;
    for (int k = 0; k < m; ++k) {
      phi[g] = roots[k];
      set[g] = true;
      if (consistent(g) && search(g + 1)) return true;
      set[g] = false;
    }
    return false;
  };
  return search(1);
}

}  // namespace hp
