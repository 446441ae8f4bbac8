#include "clique.hpp"

#include <bit>

namespace codedomain::detail {

BitGraph::BitGraph(std::size_t vertices)
    : n_(vertices), limbs_((vertices + 63) / 64), rows_(vertices * limbs_, 0) {}

void BitGraph::add_edge(std::size_t a, std::size_t b) {
  rows_[a * limbs_ + b / 64] |= std::uint64_t{1} << (b % 64);
  rows_[b * limbs_ + a / 64] |= std::uint64_t{1} << (a % 64);
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool empty(const Bits& b) {
  for (auto w : b) {
    if (w) return false;
  }
  return true;
}

class Search {
 public:
  Search(const BitGraph& g, std::size_t target, std::size_t lower_bound, BudgetMeter& meter)
      : g_(g), target_(target), meter_(meter) {
    best_size_ = target ? target - 1 : lower_bound;
  }

  CliqueResult run() {
    Bits all(g_.limbs(), 0);
    for (std::size_t v = 0; v < g_.size(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<std::uint32_t> r;
    if (g_.size() > 0) expand(r, all);
    CliqueResult out;
    out.vertices = best_;
    out.complete = !aborted_;
    return out;
  }

 private:
  // Greedy sequential coloring of p; vertices come out in non-decreasing color.
  void color_sort(const Bits& p, std::vector<std::uint32_t>& order, std::vector<std::uint32_t>& colors) {
    Bits uncolored = p;
    Bits q(p.size());
    std::uint32_t color = 0;
    while (!empty(uncolored)) {
      ++color;
      q = uncolored;
      for (std::size_t l = 0; l < q.size(); ++l) {
        while (q[l]) {
          std::size_t v = l * 64 + static_cast<std::size_t>(std::countr_zero(q[l]));
          order.push_back(static_cast<std::uint32_t>(v));
          colors.push_back(color);
          uncolored[l] &= ~(std::uint64_t{1} << (v % 64));
          const std::uint64_t* adj = g_.row(v);
          q[l] &= ~(std::uint64_t{1} << (v % 64));
          for (std::size_t k = l; k < q.size(); ++k) q[k] &= ~adj[k];
        }
      }
    }
  }

  void expand(std::vector<std::uint32_t>& r, Bits p) {
    std::vector<std::uint32_t> order;
    std::vector<std::uint32_t> colors;
    color_sort(p, order, colors);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (r.size() + colors[idx] <= best_size_) return;
      if (!meter_.tick()) {
        aborted_ = true;
        return;
      }
      std::uint32_t v = order[idx];
      r.push_back(v);
      Bits np(p.size());
      const std::uint64_t* adj = g_.row(v);
      for (std::size_t k = 0; k < p.size(); ++k) np[k] = p[k] & adj[k];
      if (empty(np) || (target_ && r.size() >= target_)) {
        if (r.size() > best_size_) {
          best_ = r;
          best_size_ = r.size();
          if (target_ && best_size_ >= target_) found_ = true;
        }
      } else {
        expand(r, np);
      }
      r.pop_back();
      if (found_ || aborted_) return;
      p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  const BitGraph& g_;
  std::size_t target_;
  BudgetMeter& meter_;
  std::size_t best_size_ = 0;
  std::vector<std::uint32_t> best_;
  bool found_ = false;
  bool aborted_ = false;
};

}  // namespace

CliqueResult max_clique(const BitGraph& g, std::size_t target, std::size_t lower_bound, BudgetMeter& meter) {
  return Search(g, target, lower_bound, meter).run();
}

}  // namespace codedomain::detail
