#pragma once

#include <cstdint>
#include <vector>

#include "codedomain/search_budget.hpp"

namespace codedomain::detail {

/// Dense undirected graph with bitset adjacency rows.
class BitGraph {
 public:
  explicit BitGraph(std::size_t vertices);

  std::size_t size() const noexcept { return n_; }
  std::size_t limbs() const noexcept { return limbs_; }
  void add_edge(std::size_t a, std::size_t b);
  bool adjacent(std::size_t a, std::size_t b) const {
    return (rows_[a * limbs_ + b / 64] >> (b % 64)) & 1u;
  }
  const std::uint64_t* row(std::size_t v) const { return rows_.data() + v * limbs_; }

 private:
  std::size_t n_;
  std::size_t limbs_;
  std::vector<std::uint64_t> rows_;
};

struct CliqueResult {
  std::vector<std::uint32_t> vertices;  // best clique found
  bool complete = true;                 // search tree fully explored
};

/// Branch and bound with greedy-coloring bounds. With target > 0 the search
/// stops at the first clique of that size; otherwise it looks for a maximum
/// clique larger than `lower_bound`. The meter is shared so callers can split
/// one budget over several searches.
CliqueResult max_clique(const BitGraph& g, std::size_t target, std::size_t lower_bound, BudgetMeter& meter);

}  // namespace codedomain::detail
