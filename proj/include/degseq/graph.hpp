#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "degseq/error.hpp"

namespace degseq {

using i64 = long long;

/// Simple undirected labeled graph on vertices {0..n-1}.
/// Immutable after construction; adjacency is kept as sorted neighbor
/// lists so iteration order is deterministic everywhere.
class Graph {
public:
  Graph() = default;

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 0) throw instance_error("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    g.edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw graph_error(graph_defect::endpoint_out_of_range,
                          "edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ") with n=" + std::to_string(n));
      if (u == v)
        throw graph_error(graph_defect::self_loop,
                          "self-loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
      g.edges_.emplace_back(u, v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end())
      throw graph_error(graph_defect::duplicate_edge, "duplicate edge in edge list");
    for (auto [u, v] : g.edges_) {
      g.adj_[static_cast<std::size_t>(u)].push_back(v);
      g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
  }

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
  }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Edges as (u,v) with u < v, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

  bool operator==(const Graph& other) const noexcept {
    return n_ == other.n_ && edges_ == other.edges_;
  }

private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw graph_error(graph_defect::endpoint_out_of_range,
                        "vertex " + std::to_string(v) + " out of range, n=" + std::to_string(n_));
  }

  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

/// One entry of a second-order target: (d1, d2) = vertices at distance
/// exactly 1 and exactly 2.
struct DegreePair {
  i64 d1 = 0;
  i64 d2 = 0;
  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

/// One entry of a degree / neighbor-degree-sum target: (d, D2) where
/// D2 is the sum of the neighbors' degrees (counts multiplicity, unlike d2).
struct XyPair {
  i64 degree = 0;
  i64 d2_sum = 0;
  friend bool operator==(const XyPair&, const XyPair&) = default;
};

struct SodsTarget {
  std::vector<DegreePair> pairs;
  friend bool operator==(const SodsTarget&, const SodsTarget&) = default;
};

struct XyTarget {
  std::vector<XyPair> pairs;
  friend bool operator==(const XyTarget&, const XyTarget&) = default;
};

/// Neighbor counts of one vertex bucketed by neighbor degree.
/// counts[i-1] = number of neighbors of degree i, for i in 1..delta.
struct DegreeSpectrum {
  std::vector<i64> counts;
  i64 for_degree(int i) const {
    return (i >= 1 && i <= static_cast<int>(counts.size()))
               ? counts[static_cast<std::size_t>(i - 1)]
               : 0;
  }
};

/// Joint degree matrix: delta x delta symmetric matrix of edge counts
/// between degree classes, 1-indexed by degree.
class Jdm {
public:
  explicit Jdm(int delta) : delta_(delta) {
    if (delta < 1) throw instance_error("JDM dimension must be >= 1");
    e_.assign(static_cast<std::size_t>(delta) * static_cast<std::size_t>(delta), 0);
  }

  static Jdm from_entries(const std::vector<std::vector<i64>>& rows) {
    const int d = static_cast<int>(rows.size());
    Jdm j(d);
    for (int i = 1; i <= d; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()) != d)
        throw instance_error("JDM must be square");
      for (int k = 1; k <= d; ++k) {
        i64 v = rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)];
        if (v < 0) throw instance_error("JDM entries must be nonnegative");
        j.raw(i, k) = v;
      }
    }
    for (int i = 1; i <= d; ++i)
      for (int k = i + 1; k <= d; ++k)
        if (j.at(i, k) != j.at(k, i)) throw instance_error("JDM must be symmetric");
    return j;
  }

  int delta() const noexcept { return delta_; }

  i64 at(int i, int j) const {
    check_index(i);
    check_index(j);
    return e_[idx(i, j)];
  }

  /// Sets both (i,j) and (j,i).
  void set(int i, int j, i64 v) {
    check_index(i);
    check_index(j);
    if (v < 0) throw instance_error("JDM entries must be nonnegative");
    e_[idx(i, j)] = v;
    e_[idx(j, i)] = v;
  }

  bool operator==(const Jdm& other) const noexcept {
    return delta_ == other.delta_ && e_ == other.e_;
  }

private:
  i64& raw(int i, int j) { return e_[idx(i, j)]; }
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(delta_) +
           static_cast<std::size_t>(j - 1);
  }
  void check_index(int i) const {
    if (i < 1 || i > delta_) throw instance_error("JDM index out of range");
  }

  int delta_ = 0;
  std::vector<i64> e_;
};

inline std::vector<i64> degree_sequence(const Graph& g) {
  std::vector<i64> d(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v)
    d[static_cast<std::size_t>(v)] = g.degree(v);
  return d;
}

namespace detail {

/// BFS distances from v; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph& g, int v) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(v)] = 0;
  q.push(v);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u))
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        q.push(w);
      }
  }
  return dist;
}

} // namespace detail

/// Number of vertices at shortest-path distance exactly k from v.
inline i64 distance_k_count(const Graph& g, int v, i64 k) {
  if (v < 0 || v >= g.vertex_count())
    throw graph_error(graph_defect::endpoint_out_of_range, "vertex out of range");
  if (k < 0) return 0;
  auto dist = detail::bfs_distances(g, v);
  return std::count(dist.begin(), dist.end(), static_cast<int>(k));
}

/// Per-vertex (d1, d2). d2 is computed by explicit distance-2 expansion,
/// never via neighbor degree sums; the two profiles are distinct notions.
inline SodsTarget second_order_profile(const Graph& g) {
  const int n = g.vertex_count();
  SodsTarget t;
  t.pairs.resize(static_cast<std::size_t>(n));
  std::vector<int> mark(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    const auto& nb = g.neighbors(v);
    mark[static_cast<std::size_t>(v)] = v;
    for (int u : nb) mark[static_cast<std::size_t>(u)] = v;
    i64 d2 = 0;
    for (int u : nb)
      for (int w : g.neighbors(u))
        if (mark[static_cast<std::size_t>(w)] != v) {
          mark[static_cast<std::size_t>(w)] = v;
          ++d2;
        }
    t.pairs[static_cast<std::size_t>(v)] = {static_cast<i64>(nb.size()), d2};
  }
  return t;
}

/// Per-vertex (d, sum of neighbor degrees).
inline XyTarget neighbor_degree_sum(const Graph& g) {
  const int n = g.vertex_count();
  XyTarget t;
  t.pairs.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    i64 s = 0;
    for (int u : g.neighbors(v)) s += g.degree(u);
    t.pairs[static_cast<std::size_t>(v)] = {static_cast<i64>(g.degree(v)), s};
  }
  return t;
}

/// Joint degree matrix of g. Requires at least one edge; degree-0
/// vertices are legal in g but never appear in the matrix.
inline Jdm jdm_of_graph(const Graph& g) {
  int delta = 0;
  for (int v = 0; v < g.vertex_count(); ++v) delta = std::max(delta, g.degree(v));
  if (delta == 0) throw instance_error("JDM undefined for a graph with no edges");
  Jdm j(delta);
  for (auto [u, v] : g.edges()) {
    int du = g.degree(u), dv = g.degree(v);
    if (du > dv) std::swap(du, dv);
    j.set(du, dv, j.at(du, dv) + 1);
  }
  return j;
}

inline DegreeSpectrum degree_spectrum(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw graph_error(graph_defect::endpoint_out_of_range, "vertex out of range");
  int delta = 0;
  for (int u = 0; u < g.vertex_count(); ++u) delta = std::max(delta, g.degree(u));
  DegreeSpectrum s;
  s.counts.assign(static_cast<std::size_t>(delta), 0);
  for (int u : g.neighbors(v)) ++s.counts[static_cast<std::size_t>(g.degree(u) - 1)];
  return s;
}

/// Two-coloring of g if bipartite, empty otherwise. Component roots are
/// the lowest-index vertices and get color 0, so the coloring is canonical.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (color[static_cast<std::size_t>(w)] < 0) {
          color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(u)];
          q.push(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

inline Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edge_list) {
  return Graph::from_edges(n, edge_list);
}

} // namespace degseq
