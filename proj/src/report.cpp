#include "hopfpartial/report.hpp"

#include <atomic>

#include "hopfpartial/parallel.hpp"

namespace hp {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "unknown";
}

namespace {
std::atomic<int> g_verbosity{1};
}

int verbosity() { return g_verbosity.load(); }
void set_verbosity(int v) { g_verbosity.store(v); }
std::size_t witness_cap() { return verbosity() >= 2 ? 50 : 1; }

Json CheckResult::to_json() const {
  Json j;
  j["id"] = id;
  j["description"] = description;
  j["status"] = status_name(status);
  j["evaluated"] = evaluated;
  j["failures"] = failures;
  if (!witnesses.empty()) {
    Json w = Json::array();
    for (const auto& x : witnesses) w.push_back({{"tuple", x.tuple}, {"detail", x.detail}});
    j["witnesses"] = w;
  }
  if (!note.empty()) j["note"] = note;
  if (!data.is_null()) j["data"] = data;
  return j;
}

CheckResult& Report::add(CheckResult c) {
  checks_.push_back(std::move(c));
  return checks_.back();
}

void Report::append(const Report& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    c.id = prefix + c.id;
    checks_.push_back(std::move(c));
  }
}

void Report::skip(const std::vector<std::pair<std::string, std::string>>& ids, const std::string& reason) {
  for (const auto& [id, desc] : ids) add(skipped_check(id, desc, reason));
}

bool Report::passed() const {
  for (const auto& c : checks_) {
    if (c.status == Status::Fail) return false;
  }
  return true;
}

std::uint64_t Report::failure_count() const {
  std::uint64_t n = 0;
  for (const auto& c : checks_) {
    if (c.status == Status::Fail) ++n;
  }
  return n;
}

const CheckResult* Report::find(const std::string& id) const {
  for (const auto& c : checks_) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

const CheckResult* Report::first_failure() const {
  for (const auto& c : checks_) {
    if (c.status == Status::Fail) return &c;
  }
  return nullptr;
}

Json Report::to_json() const {
  Json j;
  j["name"] = name_;
  j["status"] = passed() ? "pass" : "fail";
  if (!info_.empty()) j["info"] = info_;
  Json arr = Json::array();
  for (const auto& c : checks_) arr.push_back(c.to_json());
  j["checks"] = arr;
  return j;
}

namespace {

struct ChunkResult {
  std::uint64_t failures = 0;
  std::vector<Witness> witnesses;
};

void record(ChunkResult& r, const int* tuple, std::size_t len, std::string detail, std::size_t cap) {
  ++r.failures;
  if (r.witnesses.size() < cap) r.witnesses.push_back({std::vector<int>(tuple, tuple + len), std::move(detail)});
}

CheckResult merge(std::string id, std::string description, std::uint64_t evaluated,
                  std::vector<ChunkResult>& chunks, std::size_t cap) {
  CheckResult c;
  c.id = std::move(id);
  c.description = std::move(description);
  c.evaluated = evaluated;
  for (auto& ch : chunks) {
    c.failures += ch.failures;
    for (auto& w : ch.witnesses) {
      if (c.witnesses.size() < cap) c.witnesses.push_back(std::move(w));
    }
  }
  c.status = c.failures == 0 ? Status::Pass : Status::Fail;
  return c;
}

}  // namespace

CheckResult check_all(std::string id, std::string description, const std::vector<int>& dims,
                      const TuplePredicate& pred) {
  std::uint64_t total = 1;
  for (int d : dims) total *= static_cast<std::uint64_t>(std::max(d, 0));
  std::size_t cap = witness_cap();
  if (dims.empty() || total == 0) {
    std::vector<ChunkResult> none;
    if (dims.empty()) {
      ChunkResult r;
      if (auto f = pred(nullptr)) record(r, nullptr, 0, *f, cap);
      none.push_back(std::move(r));
      return merge(std::move(id), std::move(description), 1, none, cap);
    }
    return merge(std::move(id), std::move(description), 0, none, cap);
  }
  std::vector<ChunkResult> chunks(std::max(1, jobs()));
  const std::size_t len = dims.size();
  parallel_chunks(dims[0], [&](int chunk, int begin, int end) {
    ChunkResult& r = chunks[chunk];
    std::vector<int> t(len, 0);
    for (int lead = begin; lead < end; ++lead) {
      std::fill(t.begin(), t.end(), 0);
      t[0] = lead;
      while (true) {
        if (auto f = pred(t.data())) record(r, t.data(), len, std::move(*f), cap);
        std::size_t k = len;
        bool carry = true;
        while (carry && k > 1) {
          --k;
          if (++t[k] < dims[k]) {
            carry = false;
          } else {
            t[k] = 0;
          }
        }
        if (carry) break;
      }
    }
  });
  return merge(std::move(id), std::move(description), total, chunks, cap);
}

CheckResult check_identity(std::string id, std::string description, const std::vector<int>& dims,
                           const TupleValue& lhs, const TupleValue& rhs) {
  return check_all(std::move(id), std::move(description), dims, [&](const int* t) -> std::optional<std::string> {
    SparseVec l = lhs(t);
    SparseVec r = rhs(t);
    if (l == r) return std::nullopt;
    return "lhs = " + l.to_string() + "; rhs = " + r.to_string();
  });
}

CheckResult check_list(std::string id, std::string description, const std::vector<std::vector<int>>& tuples,
                       const TuplePredicate& pred) {
  std::size_t cap = witness_cap();
  std::vector<ChunkResult> chunks(std::max(1, jobs()));
  parallel_chunks(static_cast<int>(tuples.size()), [&](int chunk, int begin, int end) {
    for (int i = begin; i < end; ++i) {
      if (auto f = pred(tuples[i].data())) record(chunks[chunk], tuples[i].data(), tuples[i].size(), std::move(*f), cap);
    }
  });
  return merge(std::move(id), std::move(description), tuples.size(), chunks, cap);
}

CheckResult make_check(std::string id, std::string description, bool ok, std::string detail) {
  CheckResult c;
  c.id = std::move(id);
  c.description = std::move(description);
  c.evaluated = 1;
  c.failures = ok ? 0 : 1;
  c.status = ok ? Status::Pass : Status::Fail;
  if (!ok) c.witnesses.push_back({{}, std::move(detail)});
  return c;
}

CheckResult skipped_check(std::string id, std::string description, std::string reason) {
  CheckResult c;
  c.id = std::move(id);
  c.description = std::move(description);
  c.status = Status::Skipped;
  c.note = std::move(reason);
  return c;
}

}  // namespace hp
