#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>

namespace birat {

/// Thrown when a cooperative deadline expires inside a long computation.
class Timeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

/// Installs a thread-local deadline for the lifetime of the guard.  Nested
/// guards keep the earlier of the two deadlines.
class ScopedDeadline {
 public:
  explicit ScopedDeadline(std::chrono::duration<double> budget);
  ~ScopedDeadline();
  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;

 private:
  std::optional<Clock::time_point> saved_;
};

/// Throws Timeout when the current thread's deadline has passed.
void check_deadline();

}  // namespace birat
