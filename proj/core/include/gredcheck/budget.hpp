#pragma once

#include <atomic>
#include <memory>

#include "gredcheck/errors.hpp"

namespace gredcheck {

// Shared counter of polynomial reduction steps. Copies of a StepBudget
// share the same counter, so all work belonging to one run is charged
// against one limit. Exceeding the limit throws BudgetExceeded.
class StepBudget {
 public:
  static constexpr long long kDefaultLimit = 1'000'000;

  StepBudget() : StepBudget(kDefaultLimit) {}
  explicit StepBudget(long long limit)
      : limit_(limit), used_(std::make_shared<std::atomic<long long>>(0)) {}

  void tick(long long steps = 1) const {
    long long total = used_->fetch_add(steps, std::memory_order_relaxed) + steps;
    if (total > limit_) throw BudgetExceeded(limit_);
  }

  long long used() const { return used_->load(std::memory_order_relaxed); }
  long long limit() const { return limit_; }

 private:
  long long limit_;
  std::shared_ptr<std::atomic<long long>> used_;
};

}  // namespace gredcheck
