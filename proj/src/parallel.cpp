#include "partial_hopf/parallel.hpp"

#include <cstdlib>
#include <string>

namespace partial_hopf {

namespace {

unsigned jobs_from_environment() {
  const char* env = std::getenv("PARTIAL_HOPF_JOBS");
  if (env == nullptr) return 1;
  try {
    long v = std::stol(env);
    return v > 0 ? static_cast<unsigned>(v) : 1U;
  } catch (...) {
    return 1;
  }
}

std::atomic<unsigned>& jobs_setting() {
  static std::atomic<unsigned> jobs{jobs_from_environment()};
  return jobs;
}

}  // namespace

unsigned default_jobs() { return jobs_setting().load(); }

void set_default_jobs(unsigned jobs) { jobs_setting().store(std::max(1U, jobs)); }

}  // namespace partial_hopf
