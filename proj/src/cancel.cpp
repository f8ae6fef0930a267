#include "birat/cancel.hpp"

namespace birat {

namespace {
thread_local std::optional<Clock::time_point> current_deadline;
}

ScopedDeadline::ScopedDeadline(std::chrono::duration<double> budget) : saved_(current_deadline) {
  auto d = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget);
  if (!current_deadline || d < *current_deadline) current_deadline = d;
}

ScopedDeadline::~ScopedDeadline() { current_deadline = saved_; }

void check_deadline() {
  if (current_deadline && Clock::now() > *current_deadline) throw Timeout("step budget exceeded");
}

}  // namespace birat
