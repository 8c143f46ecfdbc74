#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>

namespace stsub {

/// Thrown by the algorithms when a Budget runs out.
struct BudgetExceeded : std::exception {
  const char* what() const noexcept override { return "budget exceeded"; }
};

/// Cooperative cancellation: a step limit, a wall-clock deadline, or both.
/// Algorithms call tick() in their main loops; the clock is polled only
/// every 256 steps to keep the common path cheap.
class Budget {
public:
  using Clock = std::chrono::steady_clock;

  Budget() = default;

  static Budget with_deadline(Clock::time_point deadline) {
    Budget b;
    b.deadline_ = deadline;
    return b;
  }

  static Budget with_timeout(Clock::duration timeout) {
    return with_deadline(Clock::now() + timeout);
  }

  static Budget with_steps(std::uint64_t limit) {
    Budget b;
    b.step_limit_ = limit;
    return b;
  }

  void set_step_limit(std::uint64_t limit) { step_limit_ = limit; }

  /// Counts n steps; throws BudgetExceeded once the limit or deadline is hit.
  void tick(std::uint64_t n = 1) {
    steps_ += n;
    if (step_limit_ && steps_ > *step_limit_) throw BudgetExceeded{};
    if (deadline_ && steps_ >= next_clock_check_) {
      next_clock_check_ = steps_ + 256;
      if (Clock::now() > *deadline_) throw BudgetExceeded{};
    }
  }

  std::uint64_t steps_used() const { return steps_; }

private:
  std::optional<Clock::time_point> deadline_;
  std::optional<std::uint64_t> step_limit_;
  std::uint64_t steps_ = 0;
  std::uint64_t next_clock_check_ = 0;
};

/// tick() through a possibly-null budget.
inline void budget_tick(Budget* b, std::uint64_t n = 1) {
  if (b) b->tick(n);
}

}  // namespace stsub
