#pragma once

#include <chrono>
#include <cstdint>

namespace codedomain {

/// Documented default seed for every stochastic procedure.
inline constexpr std::uint64_t kDefaultSeed = 0x5eed2011c0de5eedULL;

/// Resource limits and RNG seed for search procedures. Identical budget and
/// seed give identical results as long as the time limit is not the binding
/// constraint.
struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
  std::uint64_t max_millis = 60'000;
  std::uint64_t rng_seed = kDefaultSeed;
};

/// Tracks node and wall-clock consumption against a budget.
class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  /// Counts one unit of work; returns false once the budget is exhausted.
  bool tick() {
    if (exhausted_) return false;
    if (++nodes_ > budget_.max_nodes) {
      exhausted_ = true;
      return false;
    }
    if ((nodes_ & 0x3ff) == 0 && elapsed_millis() > budget_.max_millis) {
      exhausted_ = true;
      return false;
    }
    return true;
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  std::uint64_t elapsed_millis() const {
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                          std::chrono::steady_clock::now() - start_)
                                          .count());
  }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace codedomain
