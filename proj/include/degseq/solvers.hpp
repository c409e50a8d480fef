#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "degseq/error.hpp"
#include "degseq/graph.hpp"
#include "degseq/graphicality.hpp"
#include "degseq/instances.hpp"
#include "degseq/io.hpp"
#include "degseq/verify.hpp"

// Exact desk-scale decision procedures. Every solver is a deterministic
// exhaustive backtracking search: Solved certificates always pass the
// matching verifier, Infeasible is only reported after the search space
// is exhausted, and a budget stop yields Unknown, never a verdict.

namespace degseq {

/// Node/time limits for a solver run; 0 means unlimited.
struct SearchBudget {
  std::uint64_t max_nodes = 0;
  std::uint64_t max_millis = 0;
};

enum class SolveStatus { solved, infeasible, unknown };

template <class C>
struct SolveOutcome {
  SolveStatus status = SolveStatus::infeasible;
  std::optional<C> certificate; // engaged iff status == solved
  std::uint64_t nodes = 0;      // search nodes expanded (deterministic)
  std::uint64_t millis = 0;     // wall time actually spent

  bool solved() const { return status == SolveStatus::solved; }
};

namespace detail {

class budget_guard {
public:
  explicit budget_guard(SearchBudget budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  /// Counts one search node. Returns false when the budget is exhausted;
  /// node counts are unaffected by the wall clock, so they are
  /// reproducible run to run.
  bool tick() {
    if (budget_.max_nodes && nodes_ >= budget_.max_nodes) {
      exhausted_ = true;
      return false;
    }
    ++nodes_;
    if (budget_.max_millis && (nodes_ & 1023) == 0 && elapsed_millis() >= budget_.max_millis) {
      exhausted_ = true;
      return false;
    }
    return true;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

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

template <class C>
SolveOutcome<C> finish(budget_guard& guard, std::optional<C> cert) {
  SolveOutcome<C> out;
  out.nodes = guard.nodes();
  out.millis = guard.elapsed_millis();
  if (cert) {
    out.status = SolveStatus::solved;
    out.certificate = std::move(cert);
  } else if (guard.exhausted()) {
    out.status = SolveStatus::unknown;
  } else {
    out.status = SolveStatus::infeasible;
  }
  return out;
}

} // namespace detail

/// Exhaustive triple search: the lowest unused item leads each triple and
/// partners are tried in ascending index order, so the first partition
/// found is the lexicographically least one.
inline SolveOutcome<TriplePartition> solve_tp(const ThreePartitionInstance& tp,
                                              SearchBudget budget = {}) {
  tp.validate();
  detail::budget_guard guard(budget);
  const int n = static_cast<int>(tp.alphas.size());
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  TriplePartition partition;
  bool stopped = false;

  auto rec = [&](auto&& self) -> bool {
    if (!guard.tick()) {
      stopped = true;
      return false;
    }
    int lead = -1;
    for (int i = 0; i < n; ++i)
      if (!used[static_cast<std::size_t>(i)]) {
        lead = i;
        break;
      }
    if (lead < 0) return true;
    used[static_cast<std::size_t>(lead)] = true;
    for (int j = lead + 1; j < n && !stopped; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      const i64 rest = tp.W - tp.alphas[static_cast<std::size_t>(lead)] -
                       tp.alphas[static_cast<std::size_t>(j)];
      if (rest < 1) continue;
      used[static_cast<std::size_t>(j)] = true;
      for (int k = j + 1; k < n && !stopped; ++k) {
        if (used[static_cast<std::size_t>(k)]) continue;
        if (tp.alphas[static_cast<std::size_t>(k)] != rest) continue;
        used[static_cast<std::size_t>(k)] = true;
        partition.triples.push_back({lead, j, k});
        if (self(self)) return true;
        partition.triples.pop_back();
        used[static_cast<std::size_t>(k)] = false;
      }
      used[static_cast<std::size_t>(j)] = false;
    }
    used[static_cast<std::size_t>(lead)] = false;
    return false;
  };

  std::optional<TriplePartition> cert;
  if (rec(rec) && verify_tp(tp, partition)) cert = partition;
  return detail::finish(guard, std::move(cert));
}

/// Backtracking assignment of items (heaviest first) to baskets, with
/// residual count/weight pruning, per-basket reachability bounds from the
/// sorted remaining weights, and a skip of baskets whose residual state
/// was already tried for the current item (identical baskets are
/// interchangeable).
inline SolveOutcome<BasketAssignment> solve_bf(const BasketFillingInstance& bf,
                                               SearchBudget budget = {}) {
  bf.validate();
  detail::budget_guard guard(budget);
  const int n = static_cast<int>(bf.weights.size());
  const int k = static_cast<int>(bf.baskets.size());

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return bf.weights[static_cast<std::size_t>(x)] > bf.weights[static_cast<std::size_t>(y)];
  });
  std::vector<i64> sorted_w(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t)
    sorted_w[static_cast<std::size_t>(t)] = bf.weights[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])];
  std::vector<i64> prefix(static_cast<std::size_t>(n) + 1, 0);
  for (int t = 0; t < n; ++t) prefix[static_cast<std::size_t>(t) + 1] = prefix[static_cast<std::size_t>(t)] + sorted_w[static_cast<std::size_t>(t)];

  std::vector<i64> c_res(static_cast<std::size_t>(k)), s_res(static_cast<std::size_t>(k));
  for (int b = 0; b < k; ++b) {
    c_res[static_cast<std::size_t>(b)] = bf.baskets[static_cast<std::size_t>(b)].count;
    s_res[static_cast<std::size_t>(b)] = bf.baskets[static_cast<std::size_t>(b)].weight;
  }
  std::vector<int> basket_of(static_cast<std::size_t>(n), -1);
  bool stopped = false;

  // every basket must still be fillable from the remaining suffix
  auto viable = [&](int next) -> bool {
    for (int b = 0; b < k; ++b) {
      const i64 c = c_res[static_cast<std::size_t>(b)];
      const i64 s = s_res[static_cast<std::size_t>(b)];
      if (c == 0) {
        if (s != 0) return false;
        continue;
      }
      if (next + c > n) return false;
      const i64 top = prefix[static_cast<std::size_t>(next + c)] - prefix[static_cast<std::size_t>(next)];
      const i64 bottom = prefix[static_cast<std::size_t>(n)] - prefix[static_cast<std::size_t>(n - c)];
      if (s > top || s < bottom) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int t) -> bool {
    if (!guard.tick()) {
      stopped = true;
      return false;
    }
    if (t == n) return true;
    const int item = order[static_cast<std::size_t>(t)];
    const i64 w = bf.weights[static_cast<std::size_t>(item)];
    std::vector<std::pair<i64, i64>> tried;
    for (int b = 0; b < k && !stopped; ++b) {
      if (c_res[static_cast<std::size_t>(b)] == 0 || s_res[static_cast<std::size_t>(b)] < w)
        continue;
      const std::pair<i64, i64> state{c_res[static_cast<std::size_t>(b)],
                                      s_res[static_cast<std::size_t>(b)]};
      if (std::find(tried.begin(), tried.end(), state) != tried.end()) continue;
      tried.push_back(state);
      --c_res[static_cast<std::size_t>(b)];
      s_res[static_cast<std::size_t>(b)] -= w;
      basket_of[static_cast<std::size_t>(item)] = b;
      if (viable(t + 1) && self(self, t + 1)) return true;
      basket_of[static_cast<std::size_t>(item)] = -1;
      ++c_res[static_cast<std::size_t>(b)];
      s_res[static_cast<std::size_t>(b)] += w;
    }
    return false;
  };

  std::optional<BasketAssignment> cert;
  if (viable(0) && rec(rec, 0)) {
    BasketAssignment a{basket_of};
    if (verify_bf(bf, a)) cert = std::move(a);
  }
  return detail::finish(guard, std::move(cert));
}

namespace detail {

/// Shared branch-and-prune engine for the three realization problems.
///
/// Vertices are processed one at a time: the vertex with the highest
/// remaining degree requirement (ties to the lowest index) gets its whole
/// remaining neighborhood chosen in one step, drawn from vertices that
/// still need edges. Candidates with the same target pair and the same
/// already-decided adjacency are interchangeable, so only the
/// lowest-indexed ones of each such class are ever picked; this loses no
/// realizations up to relabeling positions with identical targets.
///
/// Soundness of the prunes:
///  - the residual requirements must form a graphical sequence
///    (Erdos-Gallai) because all remaining edges run between unsatisfied
///    vertices;
///  - once a vertex is satisfied its neighborhood can never change, so
///    its exact-distance-2 count only grows; overshoot is fatal;
///  - in any completed realization every vertex ends at its target
///    degree, so closure sums over neighbor targets are exact.
class realize_engine {
public:
  enum class kind { sods, sods_bipartite, xy };

  realize_engine(kind which, std::vector<i64> a, std::vector<i64> b, SearchBudget budget)
      : kind_(which), a_(std::move(a)), b_(std::move(b)), guard_(budget),
        n_(static_cast<int>(a_.size())) {
    adj_.assign(static_cast<std::size_t>(n_), {});
    residual_ = a_;
    stamp_.assign(static_cast<std::size_t>(n_), -1);
  }

  SolveOutcome<Graph> run() {
    std::optional<Graph> cert;
    if (root_feasible() && expand()) {
      std::vector<std::pair<int, int>> edges;
      for (int v = 0; v < n_; ++v)
        for (int u : adj_[static_cast<std::size_t>(v)])
          if (v < u) edges.emplace_back(v, u);
      Graph g = Graph::from_edges(n_, edges);
      if (profile_matches(g)) cert = std::move(g);
    }
    return finish(guard_, std::move(cert));
  }

private:
  bool profile_matches(const Graph& g) const {
    if (kind_ == kind::xy) {
      XyTarget t;
      for (int v = 0; v < n_; ++v)
        t.pairs.push_back({a_[static_cast<std::size_t>(v)], b_[static_cast<std::size_t>(v)]});
      return verify_xy(g, t);
    }
    SodsTarget t;
    for (int v = 0; v < n_; ++v)
      t.pairs.push_back({a_[static_cast<std::size_t>(v)], b_[static_cast<std::size_t>(v)]});
    if (!verify_sods(g, t)) return false;
    return kind_ != kind::sods_bipartite || bipartition(g).has_value();
  }

  bool root_feasible() const {
    i64 max_a = 0;
    for (int v = 0; v < n_; ++v) max_a = std::max(max_a, a_[static_cast<std::size_t>(v)]);
    for (int v = 0; v < n_; ++v) {
      const i64 a = a_[static_cast<std::size_t>(v)];
      const i64 b = b_[static_cast<std::size_t>(v)];
      if (a < 0 || b < 0 || a > n_ - 1) return false;
      if (a == 0 && b != 0) return false;
      if (kind_ == kind::xy) {
        if (b > a * max_a) return false;
        if (a >= 1 && b < a) return false;
      } else {
        if (a + b > n_ - 1) return false;
      }
    }
    if (!erdos_gallai(a_)) return false;
    if (kind_ == kind::xy) {
      i64 sum_b = 0, sum_a2 = 0;
      for (int v = 0; v < n_; ++v) {
        sum_b += b_[static_cast<std::size_t>(v)];
        sum_a2 += a_[static_cast<std::size_t>(v)] * a_[static_cast<std::size_t>(v)];
      }
      if (sum_b != sum_a2) return false;
    } else {
      SodsTarget t;
      for (int v = 0; v < n_; ++v)
        t.pairs.push_back({a_[static_cast<std::size_t>(v)], b_[static_cast<std::size_t>(v)]});
      if (!sods_d1_necessary(t)) return false;
    }
    return true;
  }

  bool expand() {
    if (!guard_.tick()) {
      stopped_ = true;
      return false;
    }
    int u = -1;
    for (int v = 0; v < n_; ++v)
      if (residual_[static_cast<std::size_t>(v)] > 0 &&
          (u < 0 ||
           residual_[static_cast<std::size_t>(v)] > residual_[static_cast<std::size_t>(u)]))
        u = v;
    if (u < 0) return true; // every requirement met

    // group interchangeable candidates: same target pair, same decided adjacency
    std::map<std::tuple<i64, i64, std::vector<int>>, std::vector<int>> classes;
    for (int v = 0; v < n_; ++v)
      if (v != u && residual_[static_cast<std::size_t>(v)] > 0)
        classes[{a_[static_cast<std::size_t>(v)], b_[static_cast<std::size_t>(v)],
                 adj_[static_cast<std::size_t>(v)]}]
            .push_back(v);
    std::vector<std::vector<int>> groups;
    for (auto& [key, members] : classes) groups.push_back(std::move(members));
    std::sort(groups.begin(), groups.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });

    const i64 need = residual_[static_cast<std::size_t>(u)];
    i64 need_sum = 0;
    if (kind_ == kind::xy) {
      need_sum = b_[static_cast<std::size_t>(u)];
      for (int x : adj_[static_cast<std::size_t>(u)]) need_sum -= a_[static_cast<std::size_t>(x)];
      if (need_sum < 0) return false;
    }
    std::vector<int> chosen;
    return choose(u, groups, 0, need, need_sum, chosen);
  }

  /// Enumerates how many candidates to take from each class; within a
  /// class always the lowest-indexed ones.
  bool choose(int u, const std::vector<std::vector<int>>& groups, std::size_t g, i64 need,
              i64 need_sum, std::vector<int>& chosen) {
    if (stopped_) return false;
    if (need == 0) {
      if (kind_ == kind::xy && need_sum != 0) return false;
      return apply(u, chosen);
    }
    if (g == groups.size()) return false;
    i64 avail_later = 0;
    for (std::size_t h = g + 1; h < groups.size(); ++h)
      avail_later += static_cast<i64>(groups[h].size());
    const i64 hi = std::min<i64>(static_cast<i64>(groups[g].size()), need);
    const i64 lo = std::max<i64>(0, need - avail_later);
    const i64 class_a = a_[static_cast<std::size_t>(groups[g].front())];
    for (i64 q = hi; q >= lo; --q) {
      if (kind_ == kind::xy && q * class_a > need_sum) continue;
      for (i64 i = 0; i < q; ++i)
        chosen.push_back(groups[g][static_cast<std::size_t>(i)]);
      if (choose(u, groups, g + 1, need - q, need_sum - q * class_a, chosen)) return true;
      for (i64 i = 0; i < q; ++i) chosen.pop_back();
      if (stopped_) return false;
    }
    return false;
  }

  bool apply(int u, const std::vector<int>& chosen) {
    if (!guard_.tick()) {
      stopped_ = true;
      return false;
    }
    for (int v : chosen) {
      adj_[static_cast<std::size_t>(u)].insert(
          std::lower_bound(adj_[static_cast<std::size_t>(u)].begin(),
                           adj_[static_cast<std::size_t>(u)].end(), v),
          v);
      adj_[static_cast<std::size_t>(v)].insert(
          std::lower_bound(adj_[static_cast<std::size_t>(v)].begin(),
                           adj_[static_cast<std::size_t>(v)].end(), u),
          u);
      --residual_[static_cast<std::size_t>(v)];
    }
    residual_[static_cast<std::size_t>(u)] = 0;

    bool ok = checks_pass();
    if (ok && expand()) return true;

    residual_[static_cast<std::size_t>(u)] = static_cast<i64>(chosen.size());
    for (int v : chosen) {
      auto& nu = adj_[static_cast<std::size_t>(u)];
      nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
      auto& nv = adj_[static_cast<std::size_t>(v)];
      nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
      ++residual_[static_cast<std::size_t>(v)];
    }
    return false;
  }

  bool checks_pass() {
    // residual requirements must stay graphical
    std::vector<i64> open;
    for (int v = 0; v < n_; ++v)
      if (residual_[static_cast<std::size_t>(v)] > 0)
        open.push_back(residual_[static_cast<std::size_t>(v)]);
    if (!open.empty()) {
      const i64 cap = static_cast<i64>(open.size()) - 1;
      for (i64 r : open)
        if (r > cap) return false;
      if (!erdos_gallai(open)) return false;
    }

    for (int v = 0; v < n_; ++v) {
      if (residual_[static_cast<std::size_t>(v)] != 0) continue;
      if (kind_ == kind::xy) {
        i64 sum = 0;
        for (int x : adj_[static_cast<std::size_t>(v)]) sum += a_[static_cast<std::size_t>(x)];
        if (sum != b_[static_cast<std::size_t>(v)]) return false;
      } else {
        if (!sods_closure_ok(v)) return false;
      }
    }
    if (kind_ == kind::sods_bipartite && !partial_bipartite()) return false;
    return true;
  }

  /// For a satisfied vertex: the distance-2 count so far never exceeds
  /// the target, the neighbor-target bound allows reaching it, and once
  /// all neighbors are satisfied too it must hit the target exactly.
  bool sods_closure_ok(int v) {
    i64 upper = 0;
    bool ball_closed = true;
    for (int x : adj_[static_cast<std::size_t>(v)]) {
      upper += a_[static_cast<std::size_t>(x)] - 1;
      if (residual_[static_cast<std::size_t>(x)] > 0) ball_closed = false;
    }
    if (upper < b_[static_cast<std::size_t>(v)]) return false;

    ++stamp_counter_;
    stamp_[static_cast<std::size_t>(v)] = stamp_counter_;
    for (int x : adj_[static_cast<std::size_t>(v)]) stamp_[static_cast<std::size_t>(x)] = stamp_counter_;
    i64 d2_now = 0;
    for (int x : adj_[static_cast<std::size_t>(v)])
      for (int y : adj_[static_cast<std::size_t>(x)])
        if (stamp_[static_cast<std::size_t>(y)] != stamp_counter_) {
          stamp_[static_cast<std::size_t>(y)] = stamp_counter_;
          ++d2_now;
        }
    if (d2_now > b_[static_cast<std::size_t>(v)]) return false;
    if (ball_closed && d2_now != b_[static_cast<std::size_t>(v)]) return false;
    return true;
  }

  bool partial_bipartite() {
    std::vector<int> color(static_cast<std::size_t>(n_), -1);
    std::vector<int> queue;
    for (int s = 0; s < n_; ++s) {
      if (color[static_cast<std::size_t>(s)] >= 0) continue;
      color[static_cast<std::size_t>(s)] = 0;
      queue.assign(1, s);
      while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        for (int y : adj_[static_cast<std::size_t>(x)]) {
          if (color[static_cast<std::size_t>(y)] < 0) {
            color[static_cast<std::size_t>(y)] = 1 - color[static_cast<std::size_t>(x)];
            queue.push_back(y);
          } else if (color[static_cast<std::size_t>(y)] == color[static_cast<std::size_t>(x)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  kind kind_;
  std::vector<i64> a_, b_;
  budget_guard guard_;
  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<i64> residual_;
  std::vector<int> stamp_;
  int stamp_counter_ = 0;
  bool stopped_ = false;

  friend SolveOutcome<Graph> run_realize(kind which, const std::vector<i64>& a,
                                         const std::vector<i64>& b, SearchBudget budget);
};

inline SolveOutcome<Graph> run_realize(realize_engine::kind which, const std::vector<i64>& a,
                                       const std::vector<i64>& b, SearchBudget budget) {
  realize_engine engine(which, a, b, budget);
  return engine.run();
}

} // namespace detail

/// Searches for a graph whose second-order profile equals the target.
inline SolveOutcome<Graph> realize_sods(const SodsTarget& target, SearchBudget budget = {}) {
  std::vector<i64> a, b;
  for (const auto& p : target.pairs) {
    a.push_back(p.d1);
    b.push_back(p.d2);
  }
  return detail::run_realize(detail::realize_engine::kind::sods, a, b, budget);
}

/// As realize_sods, restricted to bipartite realizations; odd cycles are
/// pruned as soon as they appear in the partial graph.
inline SolveOutcome<Graph> realize_sods_bipartite(const SodsTarget& target,
                                                  SearchBudget budget = {}) {
  std::vector<i64> a, b;
  for (const auto& p : target.pairs) {
    a.push_back(p.d1);
    b.push_back(p.d2);
  }
  return detail::run_realize(detail::realize_engine::kind::sods_bipartite, a, b, budget);
}

/// Searches for a graph matching a (degree, neighbor-degree-sum) target.
inline SolveOutcome<Graph> realize_xy(const XyTarget& target, SearchBudget budget = {}) {
  std::vector<i64> a, b;
  for (const auto& p : target.pairs) {
    a.push_back(p.degree);
    b.push_back(p.d2_sum);
  }
  return detail::run_realize(detail::realize_engine::kind::xy, a, b, budget);
}

/// Searches for a symmetric nonnegative matrix J with, per degree class i,
///   J_ii + sum_j J_ij = i * |V_i|   (degree capacity; diagonal twice)
///   sum_j j*J_ij + i*J_ii = D(i)    (neighbor-degree-sum totals)
/// within the graphicality bounds, and accepts only matrices that pass
/// jdm_graphical. Entries are enumerated in lexicographic order, smallest
/// values first, so the first matrix found is the least one.
/// literal_capacity switches the capacity equation to sum_j J_ij = i*|V_i|
/// (diagonal counted once).
inline SolveOutcome<Jdm> jdm_feasible_from_aggregates(const JdmAggregates& agg,
                                                      SearchBudget budget = {},
                                                      bool literal_capacity = false) {
  if (agg.class_sizes.size() != agg.d2_totals.size() || agg.class_sizes.empty())
    throw instance_error("aggregate vectors must be nonempty and equal length");
  for (i64 v : agg.class_sizes)
    if (v < 0) throw instance_error("class sizes must be nonnegative");
  for (i64 v : agg.d2_totals)
    if (v < 0) throw instance_error("D2 totals must be nonnegative");

  const int delta = static_cast<int>(agg.class_sizes.size());
  detail::budget_guard guard(budget);

  std::vector<std::pair<int, int>> vars; // upper triangle, lex order
  for (int i = 1; i <= delta; ++i)
    for (int j = i; j <= delta; ++j) vars.emplace_back(i, j);

  std::vector<i64> cap(static_cast<std::size_t>(delta));
  std::vector<i64> dd(static_cast<std::size_t>(delta));
  for (int i = 1; i <= delta; ++i) {
    cap[static_cast<std::size_t>(i - 1)] = i * agg.class_sizes[static_cast<std::size_t>(i - 1)];
    dd[static_cast<std::size_t>(i - 1)] = agg.d2_totals[static_cast<std::size_t>(i - 1)];
  }

  Jdm j(delta);
  bool stopped = false;

  auto size_of = [&](int i) { return agg.class_sizes[static_cast<std::size_t>(i - 1)]; };

  auto rec = [&](auto&& self, std::size_t vi) -> bool {
    if (!guard.tick()) {
      stopped = true;
      return false;
    }
    if (vi == vars.size()) {
      for (int i = 1; i <= delta; ++i)
        if (cap[static_cast<std::size_t>(i - 1)] != 0 || dd[static_cast<std::size_t>(i - 1)] != 0)
          return false;
      return jdm_graphical(j).graphical;
    }
    auto [r, c] = vars[vi];
    const std::size_t ri = static_cast<std::size_t>(r - 1);
    const std::size_t ci = static_cast<std::size_t>(c - 1);

    i64 hi;
    i64 cap_coeff_r, dd_coeff_r;
    if (r == c) {
      hi = size_of(r) * (size_of(r) - 1) / 2;
      cap_coeff_r = literal_capacity ? 1 : 2;
      dd_coeff_r = 2 * r;
      hi = std::min(hi, cap_coeff_r == 0 ? hi : cap[ri] / cap_coeff_r);
      if (dd_coeff_r > 0) hi = std::min(hi, dd[ri] / dd_coeff_r);
    } else {
      hi = size_of(r) * size_of(c);
      hi = std::min(hi, cap[ri]);
      hi = std::min(hi, cap[ci]);
      if (c > 0) hi = std::min(hi, dd[ri] / c);
      if (r > 0) hi = std::min(hi, dd[ci] / r);
    }
    for (i64 x = 0; x <= hi && !stopped; ++x) {
      j.set(r, c, x);
      if (r == c) {
        cap[ri] -= cap_coeff_r * x;
        dd[ri] -= dd_coeff_r * x;
      } else {
        cap[ri] -= x;
        cap[ci] -= x;
        dd[ri] -= static_cast<i64>(c) * x;
        dd[ci] -= static_cast<i64>(r) * x;
      }
      bool viable = true;
      // a row is fully decided once its last variable (r, delta) is set
      if (c == delta && (cap[ri] != 0 || dd[ri] != 0)) viable = false;
      if (viable && self(self, vi + 1)) return true;
      if (r == c) {
        cap[ri] += cap_coeff_r * x;
        dd[ri] += dd_coeff_r * x;
      } else {
        cap[ri] += x;
        cap[ci] += x;
        dd[ri] += static_cast<i64>(c) * x;
        dd[ci] += static_cast<i64>(r) * x;
      }
    }
    j.set(r, c, 0);
    return false;
  };

  std::optional<Jdm> cert;
  if (rec(rec, 0)) cert = j;
  return detail::finish(guard, std::move(cert));
}

} // namespace degseq
