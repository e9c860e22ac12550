#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace alvero {

inline constexpr std::uint64_t kDefaultStepBudget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& where, std::uint64_t limit)
      : std::runtime_error(where + ": step budget of " + std::to_string(limit) + " exhausted"), limit_(limit) {}
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

/// Shared counter of elementary reduction steps. Charging past the limit
/// throws BudgetExceeded. Thread-safe, so concurrent runs may share one.
class StepBudget {
 public:
  explicit StepBudget(std::uint64_t limit = kDefaultStepBudget) : limit_(limit) {}
  StepBudget(const StepBudget&) = delete;
  StepBudget& operator=(const StepBudget&) = delete;

  void charge(std::uint64_t steps, const char* where) {
    const std::uint64_t now = used_.fetch_add(steps, std::memory_order_relaxed) + steps;
    if (now > limit_) throw BudgetExceeded(where, limit_);
  }

  std::uint64_t used() const noexcept { return used_.load(std::memory_order_relaxed); }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

}  // namespace alvero
