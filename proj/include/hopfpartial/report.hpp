#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "hopfpartial/linalg.hpp"

namespace hp {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Skipped };
std::string status_name(Status s);

struct Witness {
  std::vector<int> tuple;
  std::string detail;
};

struct CheckResult {
  std::string id;
  std::string description;
  Status status = Status::Pass;
  std::uint64_t evaluated = 0;
  std::uint64_t failures = 0;
  std::vector<Witness> witnesses;  // first failure, or the capped list when verbose
  std::string note;
  Json data;  // check-specific values such as ranks or dimensions

  bool passed() const { return status == Status::Pass; }
  Json to_json() const;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  Json& info() { return info_; }
  const Json& info() const { return info_; }

  CheckResult& add(CheckResult c);
  void append(const Report& other, const std::string& prefix = {});
  // Adds a skipped entry for each id.
  void skip(const std::vector<std::pair<std::string, std::string>>& ids, const std::string& reason);

  bool passed() const;
  std::uint64_t failure_count() const;
  const CheckResult* find(const std::string& id) const;
  const CheckResult* first_failure() const;
  Json to_json() const;

 private:
  std::string name_;
  std::vector<CheckResult> checks_;
  Json info_ = Json::object();
};

// Verbosity >= 2 keeps up to witness_cap() witnesses per check instead of one.
int verbosity();
void set_verbosity(int v);
std::size_t witness_cap();

// Returns a failure description, or nullopt when the tuple passes.
using TuplePredicate = std::function<std::optional<std::string>(const int*)>;
using TupleValue = std::function<SparseVec(const int*)>;

// Evaluates pred on every tuple of the box dims[0] x dims[1] x ..., split over
// the leading index. The first witness is the smallest failing tuple in
// lexicographic order regardless of the worker count.
CheckResult check_all(std::string id, std::string description, const std::vector<int>& dims,
                      const TuplePredicate& pred);
CheckResult check_identity(std::string id, std::string description, const std::vector<int>& dims,
                           const TupleValue& lhs, const TupleValue& rhs);
// Same contract over an explicit tuple list (used for seeded sampling).
CheckResult check_list(std::string id, std::string description, const std::vector<std::vector<int>>& tuples,
                       const TuplePredicate& pred);

CheckResult make_check(std::string id, std::string description, bool ok, std::string detail = {});
CheckResult skipped_check(std::string id, std::string description, std::string reason);

}  // namespace hp
