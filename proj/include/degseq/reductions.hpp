#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degseq/error.hpp"
#include "degseq/graph.hpp"
#include "degseq/instances.hpp"
#include "degseq/verify.hpp"

// The gadget constructions. Each reduction turns a numeric source
// instance into a target sequence whose realizations correspond exactly
// to solutions of the source; encoders build the intended realization
// from a known solution and decoders read a solution back off any
// realization.
//
// Vertex/position layout is canonical everywhere: all atoms grouped by
// owning item, then the weight points, then the basket vertices, then
// the master point when the gadget has one.

namespace degseq {

enum class Role { atom, weight, basket, master };

struct RoleTag {
  Role role = Role::atom;
  int index = -1; // owning item for atoms, item for weights, basket index; -1 for master
  friend bool operator==(const RoleTag&, const RoleTag&) = default;
};

/// Position-to-role record for one emitted gadget target, plus the
/// source parameters needed to interpret it.
struct RoleMap {
  std::vector<RoleTag> positions;
  i64 item_count = 0;   // n (weight points)
  i64 basket_count = 0; // k
  i64 total_weight = 0; // M (atom count)
  bool has_master = false;

  friend bool operator==(const RoleMap&, const RoleMap&) = default;
};

/// 3-partition -> basket filling: every basket gets the parameter set (3, W).
inline BasketFillingInstance tp_to_bf(const ThreePartitionInstance& tp) {
  tp.validate();
  std::vector<Basket> baskets(static_cast<std::size_t>(tp.m), Basket{3, tp.W});
  return BasketFillingInstance::make(tp.alphas, std::move(baskets));
}

/// True when the gadget's separation conditions fail: some w_i + 1 equals
/// a basket count capacity, or equals n + k - 1.
inline bool bf_needs_rescale(const BasketFillingInstance& bf) {
  const i64 nk1 = bf.item_count() + bf.basket_count() - 1;
  for (i64 w : bf.weights) {
    if (w + 1 == nk1) return true;
    for (const auto& b : bf.baskets)
      if (w + 1 == b.count) return true;
  }
  return false;
}

/// Multiplies every item weight and basket weight capacity by
/// (n + k) * max_l c_l. Count capacities are unchanged. The scaled
/// instance always passes bf_needs_rescale and is solvable iff the
/// original is (the assignments are literally the same).
inline BasketFillingInstance bf_rescale(const BasketFillingInstance& bf) {
  i64 max_count = 0;
  for (const auto& b : bf.baskets) max_count = std::max(max_count, b.count);
  const i64 factor = (bf.item_count() + bf.basket_count()) * std::max<i64>(max_count, 1);
  std::vector<i64> weights;
  weights.reserve(bf.weights.size());
  for (i64 w : bf.weights) weights.push_back(w * factor);
  std::vector<Basket> baskets;
  baskets.reserve(bf.baskets.size());
  for (const auto& b : bf.baskets) baskets.push_back({b.count, b.weight * factor});
  return BasketFillingInstance::make(std::move(weights), std::move(baskets));
}

/// Basket filling -> second-order target. Emits M + n + k + 1 pairs:
///   atoms of item i:  (1, w_i + 1)
///   weight point i:   (w_i + 2, (k-1) + (n-1))
///   basket l:         (c_l + 1, (k-1) + (n - c_l) + s_l)
///   master:           (n + k, M)
/// Requires every basket to take >= 2 items (run normalize_unit_baskets
/// first) and the separation conditions to hold; pass auto_rescale to let
/// the reduction rescale a failing instance itself.
inline std::pair<SodsTarget, RoleMap> bf_to_sods(const BasketFillingInstance& input,
                                                 bool auto_rescale = false) {
  if (!input.all_baskets_multi())
    throw precondition_error(
        "gadget construction requires every basket count capacity >= 2; "
        "eliminate unit baskets first");
  BasketFillingInstance scaled = input;
  if (bf_needs_rescale(scaled)) {
    if (!auto_rescale)
      throw precondition_error(
          "instance fails the gadget separation conditions; rescale it first");
    scaled = bf_rescale(scaled);
  }
  const BasketFillingInstance& bf = scaled;

  const i64 n = bf.item_count();
  const i64 k = bf.basket_count();
  const i64 M = bf.total_weight();

  SodsTarget target;
  RoleMap roles;
  roles.item_count = n;
  roles.basket_count = k;
  roles.total_weight = M;
  roles.has_master = true;
  target.pairs.reserve(static_cast<std::size_t>(M + n + k + 1));
  roles.positions.reserve(static_cast<std::size_t>(M + n + k + 1));

  for (i64 i = 0; i < n; ++i)
    for (i64 a = 0; a < bf.weights[static_cast<std::size_t>(i)]; ++a) {
      target.pairs.push_back({1, bf.weights[static_cast<std::size_t>(i)] + 1});
      roles.positions.push_back({Role::atom, static_cast<int>(i)});
    }
  for (i64 i = 0; i < n; ++i) {
    target.pairs.push_back({bf.weights[static_cast<std::size_t>(i)] + 2, (k - 1) + (n - 1)});
    roles.positions.push_back({Role::weight, static_cast<int>(i)});
  }
  for (i64 l = 0; l < k; ++l) {
    const auto& b = bf.baskets[static_cast<std::size_t>(l)];
    target.pairs.push_back({b.count + 1, (k - 1) + (n - b.count) + b.weight});
    roles.positions.push_back({Role::basket, static_cast<int>(l)});
  }
  target.pairs.push_back({n + k, M});
  roles.positions.push_back({Role::master, -1});
  return {std::move(target), std::move(roles)};
}

/// 3-partition -> bipartite second-order target (no master point):
///   atoms of item i:  (1, alpha_i)
///   weight point i:   (alpha_i + 1, 2)
///   basket:           (3, W)
/// Requires W > 8.
inline std::pair<SodsTarget, RoleMap> tp_to_bipartite_sods(const ThreePartitionInstance& tp) {
  tp.validate();
  if (tp.W <= 8)
    throw unsupported_error("bipartite gadget requires W > 8, got W=" + std::to_string(tp.W));

  SodsTarget target;
  RoleMap roles;
  roles.item_count = 3 * tp.m;
  roles.basket_count = tp.m;
  roles.total_weight = tp.m * tp.W;
  roles.has_master = false;

  for (std::size_t i = 0; i < tp.alphas.size(); ++i)
    for (i64 a = 0; a < tp.alphas[i]; ++a) {
      target.pairs.push_back({1, tp.alphas[i]});
      roles.positions.push_back({Role::atom, static_cast<int>(i)});
    }
  for (std::size_t i = 0; i < tp.alphas.size(); ++i) {
    target.pairs.push_back({tp.alphas[i] + 1, 2});
    roles.positions.push_back({Role::weight, static_cast<int>(i)});
  }
  for (i64 l = 0; l < tp.m; ++l) {
    target.pairs.push_back({3, tp.W});
    roles.positions.push_back({Role::basket, static_cast<int>(l)});
  }
  return {std::move(target), std::move(roles)};
}

/// 3-partition -> degree/D2 target:
///   atoms of item i:  (1, alpha_i + 1)
///   weight point i:   (alpha_i + 1, alpha_i + 3)
///   basket:           (3, W + 3)
inline std::pair<XyTarget, RoleMap> tp_to_xy(const ThreePartitionInstance& tp) {
  tp.validate();

  XyTarget target;
  RoleMap roles;
  roles.item_count = 3 * tp.m;
  roles.basket_count = tp.m;
  roles.total_weight = tp.m * tp.W;
  roles.has_master = false;

  for (std::size_t i = 0; i < tp.alphas.size(); ++i)
    for (i64 a = 0; a < tp.alphas[i]; ++a) {
      target.pairs.push_back({1, tp.alphas[i] + 1});
      roles.positions.push_back({Role::atom, static_cast<int>(i)});
    }
  for (std::size_t i = 0; i < tp.alphas.size(); ++i) {
    target.pairs.push_back({tp.alphas[i] + 1, tp.alphas[i] + 3});
    roles.positions.push_back({Role::weight, static_cast<int>(i)});
  }
  for (i64 l = 0; l < tp.m; ++l) {
    target.pairs.push_back({3, tp.W + 3});
    roles.positions.push_back({Role::basket, static_cast<int>(l)});
  }
  return {std::move(target), std::move(roles)};
}

namespace detail {

/// Vertex numbering shared by the encoders: atoms grouped by item, then
/// weights, then baskets, then the optional master.
struct gadget_layout {
  std::vector<int> atom_base; // first atom vertex of each item
  int weight_base = 0;
  int basket_base = 0;
  int master = -1; // -1 when absent
  int total = 0;

  static gadget_layout make(const std::vector<i64>& weights, i64 basket_count, bool with_master) {
    gadget_layout l;
    int next = 0;
    for (i64 w : weights) {
      l.atom_base.push_back(next);
      next += static_cast<int>(w);
    }
    l.weight_base = next;
    next += static_cast<int>(weights.size());
    l.basket_base = next;
    next += static_cast<int>(basket_count);
    if (with_master) l.master = next++;
    l.total = next;
    return l;
  }
};

inline Graph build_gadget_graph(const std::vector<i64>& weights, i64 basket_count,
                                bool with_master, const std::vector<int>& basket_of_item) {
  auto layout = gadget_layout::make(weights, basket_count, with_master);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const int wp = layout.weight_base + static_cast<int>(i);
    for (i64 a = 0; a < weights[i]; ++a)
      edges.emplace_back(layout.atom_base[i] + static_cast<int>(a), wp);
    edges.emplace_back(wp, layout.basket_base + basket_of_item[i]);
  }
  if (with_master) {
    for (std::size_t i = 0; i < weights.size(); ++i)
      edges.emplace_back(layout.weight_base + static_cast<int>(i), layout.master);
    for (i64 l = 0; l < basket_count; ++l)
      edges.emplace_back(layout.basket_base + static_cast<int>(l), layout.master);
  }
  return Graph::from_edges(layout.total, edges);
}

} // namespace detail

/// Builds the intended gadget realization from a verified basket
/// assignment: atoms hang off their weight point, each weight point is
/// wired to its basket, and the master is wired to every weight point
/// and basket vertex.
inline Graph encode_bf_solution_as_graph(const BasketFillingInstance& bf,
                                         const BasketAssignment& sol) {
  if (!verify_bf(bf, sol))
    throw precondition_error("assignment does not solve the basket filling instance");
  return detail::build_gadget_graph(bf.weights, bf.basket_count(), /*with_master=*/true,
                                    sol.basket_of);
}

/// Same construction without the master point; the result realizes both
/// the bipartite second-order target and the degree/D2 target of tp.
inline Graph encode_tp_solution_as_graph(const ThreePartitionInstance& tp,
                                         const TriplePartition& partition) {
  if (!verify_tp(tp, partition))
    throw precondition_error("partition does not solve the 3-partition instance");
  std::vector<int> basket_of_item(tp.alphas.size(), -1);
  for (std::size_t t = 0; t < partition.triples.size(); ++t)
    for (int item : partition.triples[t]) basket_of_item[static_cast<std::size_t>(item)] =
        static_cast<int>(t);
  return detail::build_gadget_graph(tp.alphas, tp.m, /*with_master=*/false, basket_of_item);
}

namespace detail {

/// Recovers which vertex plays which gadget role in a realization whose
/// profile matches the target position by position. Positions sharing a
/// profile are grouped; within a group, roles with identical parameters
/// are interchangeable and are placed canonically, while genuinely mixed
/// groups (profile collisions such as basket vs master) are resolved by
/// backtracking over the placements, checking the gadget adjacency facts:
/// atoms have degree 1 and hang off weight points, weight points see
/// exactly one basket, the master sees exactly the weight and basket
/// vertices.
class role_matcher {
public:
  role_matcher(const Graph& g, const std::vector<std::pair<i64, i64>>& profile,
               const RoleMap& roles, const std::vector<i64>& item_weights,
               const std::vector<Basket>& baskets)
      : g_(g), roles_(roles), item_weights_(item_weights), baskets_(baskets) {
    const int n = g.vertex_count();
    weight_vertex_.assign(item_weights.size(), -1);
    basket_vertex_.assign(baskets.size(), -1);

    // bucket the non-atom roles of each profile group
    std::map<std::pair<i64, i64>, group> groups;
    for (int p = 0; p < n; ++p) {
      const RoleTag tag = roles.positions[static_cast<std::size_t>(p)];
      if (tag.role == Role::atom) continue;
      group& grp = groups[profile[static_cast<std::size_t>(p)]];
      grp.vertices.push_back(p);
      const bucket_key key = key_of(tag);
      auto it = std::find_if(grp.buckets.begin(), grp.buckets.end(),
                             [&](const bucket& b) { return b.key == key; });
      if (it == grp.buckets.end()) {
        grp.buckets.push_back({key, {tag.index}});
      } else {
        it->members.push_back(tag.index);
      }
    }
    for (auto& [prof, grp] : groups) groups_.push_back(std::move(grp));
  }

  /// Enumerates consistent role placements; calls accept for each one and
  /// stops when it returns true. Returns whether any placement was accepted.
  template <class Accept>
  bool search(Accept&& accept) {
    return place_group(0, accept);
  }

  const std::vector<int>& weight_vertices() const { return weight_vertex_; }
  const std::vector<int>& basket_vertices() const { return basket_vertex_; }
  int master_vertex() const { return master_vertex_; }

private:
  struct bucket_key {
    Role role;
    i64 a = 0, b = 0; // weight value, or (count, weight) capacity
    friend bool operator==(const bucket_key&, const bucket_key&) = default;
  };
  struct bucket {
    bucket_key key;
    std::vector<int> members; // role indices (item / basket), or {-1} for master
  };
  struct group {
    std::vector<int> vertices;
    std::vector<bucket> buckets;
  };

  bucket_key key_of(const RoleTag& tag) const {
    switch (tag.role) {
      case Role::weight:
        return {Role::weight, item_weights_[static_cast<std::size_t>(tag.index)], 0};
      case Role::basket:
        return {Role::basket, baskets_[static_cast<std::size_t>(tag.index)].count,
                baskets_[static_cast<std::size_t>(tag.index)].weight};
      default:
        return {Role::master, 0, 0};
    }
  }

  template <class Accept>
  bool place_group(std::size_t gi, Accept& accept) {
    if (++steps_ > step_limit_)
      throw precondition_error("role identification search exceeded its internal bound");
    if (gi == groups_.size()) return finish(accept);
    group& grp = groups_[gi];
    if (grp.buckets.size() == 1) {
      assign_bucket(grp.buckets[0], grp.vertices);
      if (place_group(gi + 1, accept)) return true;
      unassign_bucket(grp.buckets[0]);
      return false;
    }
    std::vector<int> choice(grp.vertices.size(), -1);
    return distribute(gi, grp, 0, choice, accept);
  }

  /// Assign vertices of one group to its buckets, every distribution with
  /// the right counts, vertices in ascending order.
  template <class Accept>
  bool distribute(std::size_t gi, group& grp, std::size_t vi, std::vector<int>& choice,
                  Accept& accept) {
    if (++steps_ > step_limit_)
      throw precondition_error("role identification search exceeded its internal bound");
    if (vi == grp.vertices.size()) {
      std::vector<std::vector<int>> per_bucket(grp.buckets.size());
      for (std::size_t v = 0; v < choice.size(); ++v)
        per_bucket[static_cast<std::size_t>(choice[v])].push_back(grp.vertices[v]);
      for (std::size_t b = 0; b < grp.buckets.size(); ++b)
        assign_bucket(grp.buckets[b], per_bucket[b]);
      if (place_group(gi + 1, accept)) return true;
      for (std::size_t b = 0; b < grp.buckets.size(); ++b) unassign_bucket(grp.buckets[b]);
      return false;
    }
    for (std::size_t b = 0; b < grp.buckets.size(); ++b) {
      int capacity = static_cast<int>(grp.buckets[b].members.size());
      int used = 0;
      for (std::size_t v = 0; v < vi; ++v)
        if (choice[v] == static_cast<int>(b)) ++used;
      if (used >= capacity) continue;
      choice[vi] = static_cast<int>(b);
      if (distribute(gi, grp, vi + 1, choice, accept)) return true;
      choice[vi] = -1;
    }
    return false;
  }

  /// Vertices (ascending) get the bucket's role indices (ascending):
  /// equal-parameter roles are interchangeable, so the canonical pairing
  /// is as good as any.
  void assign_bucket(const bucket& b, const std::vector<int>& vertices) {
    std::vector<int> members = b.members;
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      switch (b.key.role) {
        case Role::weight:
          weight_vertex_[static_cast<std::size_t>(members[i])] = vertices[i];
          break;
        case Role::basket:
          basket_vertex_[static_cast<std::size_t>(members[i])] = vertices[i];
          break;
        default:
          master_vertex_ = vertices[i];
          break;
      }
    }
  }

  void unassign_bucket(const bucket& b) {
    for (int m : b.members) {
      switch (b.key.role) {
        case Role::weight:
          weight_vertex_[static_cast<std::size_t>(m)] = -1;
          break;
        case Role::basket:
          basket_vertex_[static_cast<std::size_t>(m)] = -1;
          break;
        default:
          master_vertex_ = -1;
          break;
      }
    }
  }

  template <class Accept>
  bool finish(Accept& accept) {
    if (!structure_consistent()) return false;
    return accept(*this);
  }

  /// The gadget adjacency facts, checked against the actual graph.
  bool structure_consistent() const {
    std::vector<char> is_weight(static_cast<std::size_t>(g_.vertex_count()), 0);
    std::vector<char> is_basket(static_cast<std::size_t>(g_.vertex_count()), 0);
    for (int v : weight_vertex_) {
      if (v < 0) return false;
      is_weight[static_cast<std::size_t>(v)] = 1;
    }
    for (int v : basket_vertex_) {
      if (v < 0) return false;
      is_basket[static_cast<std::size_t>(v)] = 1;
    }
    if (roles_.has_master && master_vertex_ < 0) return false;

    if (master_vertex_ >= 0) {
      const auto& nb = g_.neighbors(master_vertex_);
      if (static_cast<i64>(nb.size()) != roles_.item_count + roles_.basket_count) return false;
      for (int u : nb)
        if (!is_weight[static_cast<std::size_t>(u)] && !is_basket[static_cast<std::size_t>(u)])
          return false;
    }
    for (std::size_t i = 0; i < weight_vertex_.size(); ++i) {
      const int wp = weight_vertex_[i];
      i64 atom_neighbors = 0;
      int basket_neighbors = 0;
      bool saw_master = false;
      for (int u : g_.neighbors(wp)) {
        if (u == master_vertex_) {
          saw_master = true;
        } else if (is_basket[static_cast<std::size_t>(u)]) {
          ++basket_neighbors;
        } else if (g_.degree(u) == 1) {
          ++atom_neighbors;
        } else {
          return false; // weight points never touch other weight points
        }
      }
      if (atom_neighbors != item_weights_[i]) return false;
      if (basket_neighbors != 1) return false;
      if (roles_.has_master && !saw_master) return false;
    }
    for (std::size_t l = 0; l < basket_vertex_.size(); ++l) {
      i64 weight_neighbors = 0;
      for (int u : g_.neighbors(basket_vertex_[l])) {
        if (u == master_vertex_) continue;
        if (!is_weight[static_cast<std::size_t>(u)]) return false;
        ++weight_neighbors;
      }
      if (weight_neighbors != baskets_[l].count) return false;
    }
    return true;
  }

  const Graph& g_;
  const RoleMap& roles_;
  std::vector<i64> item_weights_;
  std::vector<Basket> baskets_;
  std::vector<group> groups_;
  std::vector<int> weight_vertex_;
  std::vector<int> basket_vertex_;
  int master_vertex_ = -1;
  std::uint64_t steps_ = 0;
  static constexpr std::uint64_t step_limit_ = 10'000'000;
};

inline std::vector<std::pair<i64, i64>> as_profile(const SodsTarget& t) {
  std::vector<std::pair<i64, i64>> out;
  out.reserve(t.pairs.size());
  for (const auto& p : t.pairs) out.emplace_back(p.d1, p.d2);
  return out;
}

inline std::vector<std::pair<i64, i64>> as_profile(const XyTarget& t) {
  std::vector<std::pair<i64, i64>> out;
  out.reserve(t.pairs.size());
  for (const auto& p : t.pairs) out.emplace_back(p.degree, p.d2_sum);
  return out;
}

/// Lexicographically least assignment among swaps of equal-weight items.
inline void canonicalize_assignment(const std::vector<i64>& weights, BasketAssignment& a) {
  std::map<i64, std::vector<std::size_t>> by_weight;
  for (std::size_t i = 0; i < weights.size(); ++i) by_weight[weights[i]].push_back(i);
  for (auto& [w, items] : by_weight) {
    std::vector<int> baskets;
    baskets.reserve(items.size());
    for (std::size_t i : items) baskets.push_back(a.basket_of[i]);
    std::sort(baskets.begin(), baskets.end());
    for (std::size_t j = 0; j < items.size(); ++j) a.basket_of[items[j]] = baskets[j];
  }
}

/// Canonical triple partition: triples sorted by their value multisets,
/// with item indices reassigned so equal values use ascending indices.
inline TriplePartition canonicalize_partition(const std::vector<i64>& values,
                                              const TriplePartition& raw) {
  std::vector<std::array<i64, 3>> value_triples;
  for (const auto& t : raw.triples) {
    std::array<i64, 3> vt{values[static_cast<std::size_t>(t[0])],
                          values[static_cast<std::size_t>(t[1])],
                          values[static_cast<std::size_t>(t[2])]};
    std::sort(vt.begin(), vt.end());
    value_triples.push_back(vt);
  }
  std::sort(value_triples.begin(), value_triples.end());

  std::map<i64, std::vector<int>> free_items; // value -> unused indices, ascending
  for (std::size_t i = 0; i < values.size(); ++i)
    free_items[values[i]].push_back(static_cast<int>(i));
  TriplePartition out;
  for (const auto& vt : value_triples) {
    std::array<int, 3> triple{};
    for (int j = 0; j < 3; ++j) {
      auto& pool = free_items[vt[static_cast<std::size_t>(j)]];
      triple[static_cast<std::size_t>(j)] = pool.front();
      pool.erase(pool.begin());
    }
    std::sort(triple.begin(), triple.end());
    out.triples.push_back(triple);
  }
  return out;
}

} // namespace detail

/// Reads a basket assignment off a realization of the basket filling
/// gadget. Precondition: second_order_profile(g) equals the bf_to_sods
/// target position by position.
inline BasketAssignment decode_sods_solution(const Graph& g, const BasketFillingInstance& bf,
                                             const RoleMap& roles) {
  auto [target, fresh_roles] = bf_to_sods(bf);
  if (roles.positions != fresh_roles.positions)
    throw precondition_error("role map does not belong to this instance");
  if (static_cast<std::size_t>(g.vertex_count()) != target.pairs.size() ||
      !verify_sods(g, target))
    throw precondition_error("graph profile does not match the gadget target");

  detail::role_matcher matcher(g, detail::as_profile(target), roles, bf.weights, bf.baskets);
  std::optional<BasketAssignment> found;
  matcher.search([&](const detail::role_matcher& m) {
    BasketAssignment a;
    a.basket_of.assign(bf.weights.size(), -1);
    std::vector<int> basket_of_vertex(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t l = 0; l < m.basket_vertices().size(); ++l)
      basket_of_vertex[static_cast<std::size_t>(m.basket_vertices()[l])] = static_cast<int>(l);
    for (std::size_t i = 0; i < bf.weights.size(); ++i) {
      for (int u : g.neighbors(m.weight_vertices()[i])) {
        if (basket_of_vertex[static_cast<std::size_t>(u)] >= 0) {
          a.basket_of[i] = basket_of_vertex[static_cast<std::size_t>(u)];
          break;
        }
      }
    }
    if (!verify_bf(bf, a)) return false;
    found = std::move(a);
    return true;
  });
  if (!found) throw precondition_error("role identification failed");
  detail::canonicalize_assignment(bf.weights, *found);
  return *found;
}

namespace detail {

inline TriplePartition decode_tp_gadget(const Graph& g, const ThreePartitionInstance& tp,
                                        const std::vector<std::pair<i64, i64>>& profile,
                                        const RoleMap& roles) {
  std::vector<Basket> baskets(static_cast<std::size_t>(tp.m), Basket{3, tp.W});
  role_matcher matcher(g, profile, roles, tp.alphas, baskets);
  std::optional<TriplePartition> found;
  matcher.search([&](const role_matcher& m) {
    std::vector<int> item_of_vertex(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < m.weight_vertices().size(); ++i)
      item_of_vertex[static_cast<std::size_t>(m.weight_vertices()[i])] = static_cast<int>(i);
    TriplePartition p;
    for (int bv : m.basket_vertices()) {
      std::array<int, 3> triple{};
      int at = 0;
      for (int u : g.neighbors(bv)) {
        if (item_of_vertex[static_cast<std::size_t>(u)] < 0) continue;
        if (at == 3) return false;
        triple[static_cast<std::size_t>(at++)] = item_of_vertex[static_cast<std::size_t>(u)];
      }
      if (at != 3) return false;
      p.triples.push_back(triple);
    }
    if (!verify_tp(tp, p)) return false;
    found = std::move(p);
    return true;
  });
  if (!found) throw precondition_error("role identification failed");
  return canonicalize_partition(tp.alphas, *found);
}

} // namespace detail

/// Reads a triple partition off a realization of the bipartite gadget.
inline TriplePartition decode_bipartite_solution(const Graph& g,
                                                 const ThreePartitionInstance& tp) {
  auto [target, roles] = tp_to_bipartite_sods(tp);
  if (static_cast<std::size_t>(g.vertex_count()) != target.pairs.size() ||
      !verify_sods(g, target))
    throw precondition_error("graph profile does not match the gadget target");
  return detail::decode_tp_gadget(g, tp, detail::as_profile(target), roles);
}

/// Reads a triple partition off a realization of the degree/D2 gadget.
inline TriplePartition decode_xy_solution(const Graph& g, const ThreePartitionInstance& tp) {
  auto [target, roles] = tp_to_xy(tp);
  if (static_cast<std::size_t>(g.vertex_count()) != target.pairs.size() ||
      !verify_xy(g, target))
    throw precondition_error("graph profile does not match the gadget target");
  return detail::decode_tp_gadget(g, tp, detail::as_profile(target), roles);
}

} // namespace degseq
