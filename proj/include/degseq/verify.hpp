#pragma once

#include <vector>

#include "degseq/graph.hpp"
#include "degseq/instances.hpp"

// Certificate checkers. Each one recomputes the relevant profile or sums
// from scratch and compares exactly; nothing here trusts solver state.

namespace degseq {

inline bool verify_sods(const Graph& g, const SodsTarget& target) {
  if (static_cast<std::size_t>(g.vertex_count()) != target.pairs.size()) return false;
  return second_order_profile(g) == target;
}

inline bool verify_xy(const Graph& g, const XyTarget& target) {
  if (static_cast<std::size_t>(g.vertex_count()) != target.pairs.size()) return false;
  return neighbor_degree_sum(g) == target;
}

inline bool verify_bf(const BasketFillingInstance& bf, const BasketAssignment& sol) {
  const std::size_t n = bf.weights.size();
  const int k = static_cast<int>(bf.baskets.size());
  if (sol.basket_of.size() != n) return false;
  std::vector<i64> count(static_cast<std::size_t>(k), 0);
  std::vector<i64> weight(static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < n; ++i) {
    int b = sol.basket_of[i];
    if (b < 0 || b >= k) return false;
    ++count[static_cast<std::size_t>(b)];
    weight[static_cast<std::size_t>(b)] += bf.weights[i];
  }
  for (int b = 0; b < k; ++b)
    if (count[static_cast<std::size_t>(b)] != bf.baskets[static_cast<std::size_t>(b)].count ||
        weight[static_cast<std::size_t>(b)] != bf.baskets[static_cast<std::size_t>(b)].weight)
      return false;
  return true;
}

inline bool verify_tp(const ThreePartitionInstance& tp, const TriplePartition& partition) {
  const std::size_t total = tp.alphas.size();
  if (partition.triples.size() != static_cast<std::size_t>(tp.m)) return false;
  std::vector<bool> used(total, false);
  for (const auto& triple : partition.triples) {
    i64 sum = 0;
    for (int item : triple) {
      if (item < 0 || item >= static_cast<int>(total)) return false;
      if (used[static_cast<std::size_t>(item)]) return false;
      used[static_cast<std::size_t>(item)] = true;
      sum += tp.alphas[static_cast<std::size_t>(item)];
    }
    if (sum != tp.W) return false;
  }
  return true;
}

} // namespace degseq
