#pragma once

#include <cstdint>
#include <limits>

#include "evencycle/errors.hpp"

namespace evencycle {

/// Step counter for the exponential searches. A search charges one step per
/// node it expands and throws BudgetExceeded once the guard is passed.
class Budget {
public:
  static constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();
  static constexpr std::uint64_t kDefaultGuard = 2'000'000'000ULL;

  constexpr Budget() = default;
  constexpr explicit Budget(std::uint64_t guard) : guard_(guard) {}

  void charge(std::uint64_t steps = 1) {
    used_ += steps;
    if (used_ > guard_)
      throw BudgetExceeded(used_, guard_);
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t guard() const { return guard_; }

private:
  std::uint64_t guard_ = kDefaultGuard;
  std::uint64_t used_ = 0;
};

} // namespace evencycle
