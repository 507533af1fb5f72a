#include "hopfpartial/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace hp {

namespace {

int default_jobs() {
  if (const char* env = std::getenv("HOPF_PARTIAL_JOBS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (...) {
    }
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

std::atomic<int>& jobs_setting() {
  static std::atomic<int> n{default_jobs()};
  return n;
}

}  // namespace

int jobs() { return jobs_setting().load(); }

void set_jobs(int n) { jobs_setting().store(n > 0 ? n : default_jobs()); }

}  // namespace hp
