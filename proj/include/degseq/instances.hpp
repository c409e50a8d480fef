#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "degseq/error.hpp"
#include "degseq/graph.hpp"

namespace degseq {

/// 3-partition source instance: 3m positive integers alpha_i with
/// W/4 < alpha_i < W/2 and sum m*W; asks for m triples each summing to W.
struct ThreePartitionInstance {
  i64 m = 0;
  i64 W = 0;
  std::vector<i64> alphas;

  static ThreePartitionInstance make(i64 m, i64 W, std::vector<i64> alphas) {
    ThreePartitionInstance tp{m, W, std::move(alphas)};
    tp.validate();
    return tp;
  }

  void validate() const {
    if (m < 1) throw instance_error("3-partition: m must be >= 1");
    if (W < 1) throw instance_error("3-partition: W must be >= 1");
    if (static_cast<i64>(alphas.size()) != 3 * m)
      throw instance_error("3-partition: expected 3m values");
    i64 sum = 0;
    for (i64 a : alphas) {
      // strict W/4 < a < W/2 without division: 4a > W and 2a < W
      if (4 * a <= W || 2 * a >= W)
        throw instance_error("3-partition: value " + std::to_string(a) +
                             " violates W/4 < a < W/2 for W=" + std::to_string(W));
      sum += a;
    }
    if (sum != m * W)
      throw instance_error("3-partition: values sum to " + std::to_string(sum) +
                           ", expected m*W=" + std::to_string(m * W));
  }
};

struct Basket {
  i64 count = 0;  // c: number of items the basket must receive
  i64 weight = 0; // s: exact total weight it must receive
  friend bool operator==(const Basket&, const Basket&) = default;
};

/// Basket filling instance: n weighted items, k baskets (c_l, s_l) with
/// sum c_l = n and sum s_l = sum w_i.
struct BasketFillingInstance {
  std::vector<i64> weights;
  std::vector<Basket> baskets;

  static BasketFillingInstance make(std::vector<i64> weights, std::vector<Basket> baskets) {
    BasketFillingInstance bf{std::move(weights), std::move(baskets)};
    bf.validate();
    return bf;
  }

  i64 item_count() const { return static_cast<i64>(weights.size()); }
  i64 basket_count() const { return static_cast<i64>(baskets.size()); }
  i64 total_weight() const { return std::accumulate(weights.begin(), weights.end(), i64{0}); }

  /// True when every basket takes at least two items; the gadget
  /// construction requires this (see normalize_unit_baskets).
  bool all_baskets_multi() const {
    return std::all_of(baskets.begin(), baskets.end(),
                       [](const Basket& b) { return b.count >= 2; });
  }

  void validate() const {
    i64 count_sum = 0, weight_sum = 0;
    for (i64 w : weights)
      if (w < 1) throw instance_error("basket filling: item weights must be positive");
    for (const auto& b : baskets) {
      if (b.count < 1) throw instance_error("basket filling: basket count capacity must be >= 1");
      if (b.weight < 0) throw instance_error("basket filling: basket weight capacity must be >= 0");
      count_sum += b.count;
      weight_sum += b.weight;
    }
    if (count_sum != item_count())
      throw instance_error("basket filling: basket counts sum to " + std::to_string(count_sum) +
                           ", expected n=" + std::to_string(item_count()));
    if (weight_sum != total_weight())
      throw instance_error("basket filling: basket weights sum to " + std::to_string(weight_sum) +
                           ", expected M=" + std::to_string(total_weight()));
  }

  friend bool operator==(const BasketFillingInstance&, const BasketFillingInstance&) = default;
};

/// Certificate for basket filling: basket_of[i] is the basket of item i.
struct BasketAssignment {
  std::vector<int> basket_of;
  friend bool operator==(const BasketAssignment&, const BasketAssignment&) = default;
};

/// Certificate for 3-partition: triples of item indices.
struct TriplePartition {
  std::vector<std::array<int, 3>> triples;
  friend bool operator==(const TriplePartition&, const TriplePartition&) = default;
};

/// Result of eliminating single-item baskets from an instance.
struct UnitBasketNormalization {
  bool solvable = true;                     // false: some (1,s) basket has no weight-s item
  BasketFillingInstance instance;           // remaining instance, every c >= 2
  std::vector<std::pair<int, int>> fixed;   // (item, basket) pairs already decided, original indices
  std::vector<int> item_map;                // new item index -> original item index
  std::vector<int> basket_map;              // new basket index -> original basket index
};

/// Removes every basket with count capacity 1 by matching it to an item
/// of exactly its weight capacity (lowest item index first). A basket
/// that cannot be matched proves the instance unsolvable.
inline UnitBasketNormalization normalize_unit_baskets(const BasketFillingInstance& bf) {
  UnitBasketNormalization out;
  const int n = static_cast<int>(bf.weights.size());
  std::vector<bool> item_used(static_cast<std::size_t>(n), false);
  std::vector<bool> basket_kept(bf.baskets.size(), true);

  for (std::size_t b = 0; b < bf.baskets.size(); ++b) {
    if (bf.baskets[b].count != 1) continue;
    basket_kept[b] = false;
    int match = -1;
    for (int i = 0; i < n; ++i)
      if (!item_used[static_cast<std::size_t>(i)] &&
          bf.weights[static_cast<std::size_t>(i)] == bf.baskets[b].weight) {
        match = i;
        break;
      }
    if (match < 0) {
      out.solvable = false;
      return out;
    }
    item_used[static_cast<std::size_t>(match)] = true;
    out.fixed.emplace_back(match, static_cast<int>(b));
  }

  std::vector<i64> weights;
  std::vector<Basket> baskets;
  for (int i = 0; i < n; ++i)
    if (!item_used[static_cast<std::size_t>(i)]) {
      out.item_map.push_back(i);
      weights.push_back(bf.weights[static_cast<std::size_t>(i)]);
    }
  for (std::size_t b = 0; b < bf.baskets.size(); ++b)
    if (basket_kept[b]) {
      out.basket_map.push_back(static_cast<int>(b));
      baskets.push_back(bf.baskets[b]);
    }
  out.instance = BasketFillingInstance::make(std::move(weights), std::move(baskets));
  return out;
}

} // namespace degseq
