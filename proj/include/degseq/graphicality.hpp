#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "degseq/error.hpp"
#include "degseq/graph.hpp"

namespace degseq {

/// Greedy realization of a degree sequence. Position-indexed: a returned
/// graph has degree(v) == seq[v] for every v. Among equal residual
/// degrees the lowest vertex index is picked, so the output is
/// deterministic. Non-graphical sequences yield nullopt.
inline std::optional<Graph> havel_hakimi(const std::vector<i64>& seq) {
  const int n = static_cast<int>(seq.size());
  for (i64 d : seq) {
    if (d < 0) throw instance_error("degrees must be nonnegative");
    if (d > n - 1) return std::nullopt;
  }
  std::vector<i64> residual(seq);
  std::vector<std::pair<int, int>> edges;

  for (;;) {
    int v = -1;
    for (int u = 0; u < n; ++u)
      if (residual[static_cast<std::size_t>(u)] > 0 &&
          (v < 0 || residual[static_cast<std::size_t>(u)] > residual[static_cast<std::size_t>(v)]))
        v = u;
    if (v < 0) break; // all satisfied

    // connect v to the next-largest residual vertices
    std::vector<int> order;
    for (int u = 0; u < n; ++u)
      if (u != v && residual[static_cast<std::size_t>(u)] > 0) order.push_back(u);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return residual[static_cast<std::size_t>(a)] > residual[static_cast<std::size_t>(b)];
    });
    const i64 need = residual[static_cast<std::size_t>(v)];
    if (static_cast<i64>(order.size()) < need) return std::nullopt;
    for (i64 i = 0; i < need; ++i) {
      int u = order[static_cast<std::size_t>(i)];
      edges.emplace_back(std::min(u, v), std::max(u, v));
      --residual[static_cast<std::size_t>(u)];
    }
    residual[static_cast<std::size_t>(v)] = 0;
  }
  return Graph::from_edges(n, edges);
}

/// Erdos-Gallai test: even sum and, for the nonincreasing rearrangement,
/// sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k) for every k.
inline bool erdos_gallai(std::vector<i64> seq) {
  for (i64 d : seq)
    if (d < 0) throw instance_error("degrees must be nonnegative");
  std::sort(seq.begin(), seq.end(), std::greater<>());
  const i64 n = static_cast<i64>(seq.size());
  if (!seq.empty() && seq.front() > n - 1) return false;
  i64 sum = std::accumulate(seq.begin(), seq.end(), i64{0});
  if (sum % 2 != 0) return false;

  i64 prefix = 0;
  for (i64 k = 1; k <= n; ++k) {
    prefix += seq[static_cast<std::size_t>(k - 1)];
    i64 rhs = k * (k - 1);
    for (i64 i = k; i < n; ++i) rhs += std::min(seq[static_cast<std::size_t>(i)], k);
    if (prefix > rhs) return false;
  }
  return true;
}

struct JdmCheck {
  bool graphical = false;
  std::vector<i64> class_sizes; // n_i, 1-indexed by degree class; 0 for empty rows
  std::string failure;          // human-readable reason when not graphical
};

/// Erdos-Gallai-type test for joint degree matrices:
///   (i)  n_i := (J_ii + sum_j J_ij) / i is a nonnegative integer,
///   (ii) J_ii <= C(n_i, 2),
///   (iii) J_ij <= n_i * n_j for i != j.
/// An all-zero row means "no vertices of that degree" (n_i = 0).
inline JdmCheck jdm_graphical(const Jdm& j) {
  const int d = j.delta();
  JdmCheck out;
  out.class_sizes.assign(static_cast<std::size_t>(d), 0);

  for (int i = 1; i <= d; ++i) {
    i64 row = 0;
    for (int k = 1; k <= d; ++k) row += j.at(i, k);
    if (row == 0) continue;
    i64 num = j.at(i, i) + row;
    if (num % i != 0) {
      out.failure = "n_" + std::to_string(i) + " not integer";
      return out;
    }
    out.class_sizes[static_cast<std::size_t>(i - 1)] = num / i;
  }
  for (int i = 1; i <= d; ++i) {
    i64 ni = out.class_sizes[static_cast<std::size_t>(i - 1)];
    if (j.at(i, i) > ni * (ni - 1) / 2) {
      out.failure = "J_" + std::to_string(i) + std::to_string(i) + " exceeds C(n_" +
                    std::to_string(i) + ",2)";
      return out;
    }
    for (int k = i + 1; k <= d; ++k) {
      i64 nk = out.class_sizes[static_cast<std::size_t>(k - 1)];
      if (j.at(i, k) > ni * nk) {
        out.failure = "J_" + std::to_string(i) + std::to_string(k) + " exceeds n_" +
                      std::to_string(i) + "*n_" + std::to_string(k);
        return out;
      }
    }
  }
  out.graphical = true;
  return out;
}

/// Cheap sound prefilter for second-order targets: returns false only
/// when no realization can exist. Rules:
///   1. d1 <= n-1 and d1 + d2 <= n-1 for every pair; d1 = 0 forces d2 = 0.
///   2. the d1 projection must be graphical (Erdos-Gallai).
///   3. there must be d1(v) positive-degree candidates besides v, and
///      d2(v) <= sum of the d1(v) largest values of (d1(u) - 1) over them,
///      since every distance-2 vertex is a non-v neighbor of a neighbor.
inline bool sods_d1_necessary(const SodsTarget& target) {
  const i64 n = static_cast<i64>(target.pairs.size());
  std::vector<i64> d1;
  d1.reserve(target.pairs.size());
  for (const auto& p : target.pairs) {
    if (p.d1 < 0 || p.d2 < 0) throw instance_error("target entries must be nonnegative");
    if (p.d1 > n - 1) return false;
    if (p.d1 + p.d2 > n - 1) return false;
    if (p.d1 == 0 && p.d2 != 0) return false;
    d1.push_back(p.d1);
  }
  if (!erdos_gallai(d1)) return false;

  std::vector<i64> positive_sorted; // (d1 - 1) over positive-degree vertices, descending
  for (i64 d : d1)
    if (d >= 1) positive_sorted.push_back(d - 1);
  std::sort(positive_sorted.begin(), positive_sorted.end(), std::greater<>());
  std::vector<i64> prefix(positive_sorted.size() + 1, 0);
  for (std::size_t i = 0; i < positive_sorted.size(); ++i)
    prefix[i + 1] = prefix[i] + positive_sorted[i];

  for (const auto& p : target.pairs) {
    if (p.d1 == 0) continue;
    // candidates excluding v itself
    i64 candidates = static_cast<i64>(positive_sorted.size()) - 1;
    if (candidates < p.d1) return false;
    // the bound uses the d1(v) largest (d1(u)-1); dropping v's own entry
    // from the top-k only weakens the sum, so including it stays sound
    i64 bound = prefix[static_cast<std::size_t>(std::min<i64>(
        p.d1, static_cast<i64>(positive_sorted.size())))];
    if (p.d2 > bound) return false;
  }
  return true;
}

} // namespace degseq
