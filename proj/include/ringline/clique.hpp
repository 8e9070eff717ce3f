#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ringline/bitset.hpp"

namespace ringline {

/// Exact maximum clique by branch and bound over bit-set candidate sets, pruned with a
/// greedy colouring bound (each colour class contributes at most one clique vertex).
class MaxCliqueSearch {
public:
  /// `adjacency[v]` is the neighbour set of v; the relation must be symmetric and irreflexive.
  explicit MaxCliqueSearch(const std::vector<Bitset>& adjacency) : adj_(adjacency) {}

  /// With a non-empty pairwise-adjacent `seed`, returns a maximum clique containing the
  /// seed whenever one exists; the seed vertices come first in the result.
  std::vector<std::size_t> solve(const std::vector<std::size_t>& seed = {}) {
    const std::size_t n = adj_.size();
    best_.clear();
    nodes_ = 0;
    if (n == 0) return best_;
    if (is_clique(seed)) {
      Bitset cand = Bitset::full(n);
      for (auto s : seed) cand &= adj_[s];
      std::vector<std::size_t> current = seed;
      best_ = seed;
      if (cand.any()) expand(current, std::move(cand));
    }
    std::vector<std::size_t> current;
    expand(current, Bitset::full(n));
    return best_;
  }

  /// Search-tree nodes visited by the last solve().
  std::size_t nodes() const noexcept { return nodes_; }

  bool is_clique(const std::vector<std::size_t>& vs) const {
    if (vs.empty()) return false;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!adj_[vs[i]].test(vs[j])) return false;
    return true;
  }

private:
  // Vertices of `cand` in colour order with the colour number of each.
  std::vector<std::pair<std::size_t, std::size_t>> colour(const Bitset& cand) const {
    std::vector<std::pair<std::size_t, std::size_t>> order;
    Bitset uncoloured = cand;
    std::size_t k = 0;
    while (uncoloured.any()) {
      ++k;
      Bitset q = uncoloured;
      while (q.any()) {
        const std::size_t v = q.first();
        q.reset(v);
        q.subtract(adj_[v]);
        uncoloured.reset(v);
        order.emplace_back(v, k);
      }
    }
    return order;
  }

  void expand(std::vector<std::size_t>& current, Bitset cand) {
    ++nodes_;
    const auto order = colour(cand);
    for (std::size_t i = order.size(); i-- > 0;) {
      const auto [v, bound] = order[i];
      if (current.size() + bound <= best_.size()) return;
      current.push_back(v);
      Bitset next = cand & adj_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      cand.reset(v);
    }
  }

  const std::vector<Bitset>& adj_;
  std::vector<std::size_t> best_;
  std::size_t nodes_ = 0;
};

inline std::vector<std::size_t> max_clique(const std::vector<Bitset>& adjacency,
                                           const std::vector<std::size_t>& seed = {}) {
  return MaxCliqueSearch(adjacency).solve(seed);
}

}  // namespace ringline
