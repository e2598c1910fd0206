#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace inertia {

// Malformed input: bad file, table that is not a group, parameter out of
// range. The CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration outgrew its configured cap or deadline. CLI exit code 3.
// `partial` describes progress made before aborting.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& msg, std::string partial_ = {})
      : std::runtime_error(msg), partial(std::move(partial_)) {}
  std::string partial;
};

// Two independent computations of the same quantity disagreed. Never
// swallowed: this always indicates a bug.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

// Enumeration limits shared by all modules.
struct RunLimits {
  std::uint64_t order_cap = 20000;   // group closure cap
  std::uint64_t tuple_cap = 1000000; // tuple classes per level
  int threads = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void set_time_limit(double seconds) {
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(seconds));
  }

  void check_deadline(const char* where) const {
    if (deadline && std::chrono::steady_clock::now() > *deadline)
      throw CapExceeded(std::string("time limit exceeded in ") + where);
  }
};

}  // namespace inertia
