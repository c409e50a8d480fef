#pragma once

#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "degseq/error.hpp"
#include "degseq/graph.hpp"
#include "degseq/instances.hpp"

// Text formats. All of them are ASCII and newline-delimited; lines whose
// first non-blank character is '#' are comments and ignored. Serializers
// emit the canonical form (no comments), and parse(serialize(x)) == x.

namespace degseq {

namespace detail {

class line_reader {
public:
  explicit line_reader(std::istream& in) : in_(in) {}

  /// Next non-comment, non-blank line; false at end of input.
  bool next(std::string& out) {
    std::string line;
    while (std::getline(in_, line)) {
      std::size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos) continue;
      if (line[i] == '#') continue;
      out = line;
      return true;
    }
    return false;
  }

private:
  std::istream& in_;
};

inline std::vector<i64> parse_ints(const std::string& line, const char* what) {
  std::istringstream ss(line);
  std::vector<i64> out;
  i64 v;
  while (ss >> v) out.push_back(v);
  std::string rest;
  if (ss >> rest)
    throw parse_error(std::string("unexpected token '") + rest + "' in " + what);
  ss.clear();
  return out;
}

inline std::vector<i64> expect_ints(line_reader& r, std::size_t count, const char* what) {
  std::string line;
  std::vector<i64> acc;
  while (acc.size() < count) {
    if (!r.next(line))
      throw parse_error(std::string("unexpected end of input while reading ") + what);
    auto vs = parse_ints(line, what);
    acc.insert(acc.end(), vs.begin(), vs.end());
  }
  if (acc.size() != count)
    throw parse_error(std::string("too many values while reading ") + what);
  return acc;
}

inline void expect_eof(line_reader& r, const char* what) {
  std::string line;
  if (r.next(line))
    throw parse_error(std::string("trailing content after ") + what + ": '" + line + "'");
}

inline int to_vertex(i64 v, const char* what) {
  if (v < 0 || v > 1'000'000'000)
    throw parse_error(std::string("value out of range in ") + what);
  return static_cast<int>(v);
}

} // namespace detail

// ---- graph: "n m" then m lines "u v" ----

inline Graph parse_graph(std::istream& in) {
  detail::line_reader r(in);
  auto head = detail::expect_ints(r, 2, "graph header");
  int n = detail::to_vertex(head[0], "graph header");
  i64 m = head[1];
  if (m < 0) throw parse_error("negative edge count");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (i64 i = 0; i < m; ++i) {
    auto e = detail::expect_ints(r, 2, "graph edge");
    edges.emplace_back(detail::to_vertex(e[0], "graph edge"),
                       detail::to_vertex(e[1], "graph edge"));
  }
  detail::expect_eof(r, "graph");
  return Graph::from_edges(n, edges);
}

inline void serialize_graph(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

// ---- degree sequence: "n" then n integers ----

inline std::vector<i64> parse_degree_sequence(std::istream& in) {
  detail::line_reader r(in);
  auto head = detail::expect_ints(r, 1, "degree sequence header");
  if (head[0] < 0) throw parse_error("negative length");
  auto vals = detail::expect_ints(r, static_cast<std::size_t>(head[0]), "degree sequence");
  detail::expect_eof(r, "degree sequence");
  for (i64 v : vals)
    if (v < 0) throw parse_error("negative degree");
  return vals;
}

inline void serialize_degree_sequence(const std::vector<i64>& seq, std::ostream& out) {
  out << seq.size() << '\n';
  for (std::size_t i = 0; i < seq.size(); ++i)
    out << seq[i] << (i + 1 == seq.size() ? '\n' : ' ');
  if (seq.empty()) out << '\n';
}

// ---- SODS / XY targets: "n" then n lines "a b" ----

namespace detail {

inline std::vector<std::pair<i64, i64>> parse_pair_lines(std::istream& in, const char* what) {
  line_reader r(in);
  auto head = expect_ints(r, 1, what);
  if (head[0] < 0) throw parse_error("negative length");
  std::vector<std::pair<i64, i64>> out;
  out.reserve(static_cast<std::size_t>(head[0]));
  for (i64 i = 0; i < head[0]; ++i) {
    auto p = expect_ints(r, 2, what);
    if (p[0] < 0 || p[1] < 0) throw parse_error(std::string("negative value in ") + what);
    out.emplace_back(p[0], p[1]);
  }
  expect_eof(r, what);
  return out;
}

} // namespace detail

inline SodsTarget parse_sods_target(std::istream& in) {
  SodsTarget t;
  for (auto [a, b] : detail::parse_pair_lines(in, "second-order target"))
    t.pairs.push_back({a, b});
  return t;
}

inline void serialize_sods_target(const SodsTarget& t, std::ostream& out) {
  out << t.pairs.size() << '\n';
  for (const auto& p : t.pairs) out << p.d1 << ' ' << p.d2 << '\n';
}

inline XyTarget parse_xy_target(std::istream& in) {
  XyTarget t;
  for (auto [a, b] : detail::parse_pair_lines(in, "degree/D2 target"))
    t.pairs.push_back({a, b});
  return t;
}

inline void serialize_xy_target(const XyTarget& t, std::ostream& out) {
  out << t.pairs.size() << '\n';
  for (const auto& p : t.pairs) out << p.degree << ' ' << p.d2_sum << '\n';
}

// ---- 3-partition: "m W" then 3m integers ----

inline ThreePartitionInstance parse_tp(std::istream& in) {
  detail::line_reader r(in);
  auto head = detail::expect_ints(r, 2, "3-partition header");
  if (head[0] < 0) throw parse_error("negative m");
  auto alphas = detail::expect_ints(r, static_cast<std::size_t>(head[0] * 3), "3-partition values");
  detail::expect_eof(r, "3-partition instance");
  return ThreePartitionInstance::make(head[0], head[1], alphas);
}

inline void serialize_tp(const ThreePartitionInstance& tp, std::ostream& out) {
  out << tp.m << ' ' << tp.W << '\n';
  for (std::size_t i = 0; i < tp.alphas.size(); ++i)
    out << tp.alphas[i] << (i + 1 == tp.alphas.size() ? '\n' : ' ');
  if (tp.alphas.empty()) out << '\n';
}

// ---- basket filling: "n k", one line of n weights, then k lines "c s" ----

inline BasketFillingInstance parse_bf(std::istream& in) {
  detail::line_reader r(in);
  auto head = detail::expect_ints(r, 2, "basket filling header");
  if (head[0] < 0 || head[1] < 0) throw parse_error("negative count in basket filling header");
  auto weights = detail::expect_ints(r, static_cast<std::size_t>(head[0]), "item weights");
  std::vector<Basket> baskets;
  baskets.reserve(static_cast<std::size_t>(head[1]));
  for (i64 i = 0; i < head[1]; ++i) {
    auto b = detail::expect_ints(r, 2, "basket capacity");
    baskets.push_back({b[0], b[1]});
  }
  detail::expect_eof(r, "basket filling instance");
  return BasketFillingInstance::make(weights, baskets);
}

inline void serialize_bf(const BasketFillingInstance& bf, std::ostream& out) {
  out << bf.weights.size() << ' ' << bf.baskets.size() << '\n';
  for (std::size_t i = 0; i < bf.weights.size(); ++i)
    out << bf.weights[i] << (i + 1 == bf.weights.size() ? '\n' : ' ');
  if (bf.weights.empty()) out << '\n';
  for (const auto& b : bf.baskets) out << b.count << ' ' << b.weight << '\n';
}

// ---- JDM: "delta" then delta lines of delta integers ----

inline Jdm parse_jdm(std::istream& in) {
  detail::line_reader r(in);
  auto head = detail::expect_ints(r, 1, "JDM header");
  if (head[0] < 1) throw parse_error("JDM dimension must be >= 1");
  const auto d = static_cast<std::size_t>(head[0]);
  std::vector<std::vector<i64>> rows;
  rows.reserve(d);
  for (std::size_t i = 0; i < d; ++i) rows.push_back(detail::expect_ints(r, d, "JDM row"));
  detail::expect_eof(r, "JDM");
  return Jdm::from_entries(rows);
}

inline void serialize_jdm(const Jdm& j, std::ostream& out) {
  out << j.delta() << '\n';
  for (int i = 1; i <= j.delta(); ++i)
    for (int k = 1; k <= j.delta(); ++k)
      out << j.at(i, k) << (k == j.delta() ? '\n' : ' ');
}

// ---- per-class aggregates: "delta", class sizes, D2 totals ----

struct JdmAggregates {
  std::vector<i64> class_sizes; // |V_i|, 1-indexed by degree class
  std::vector<i64> d2_totals;   // sum of D2 over V_i
};

inline JdmAggregates parse_jdm_aggregates(std::istream& in) {
  detail::line_reader r(in);
  auto head = detail::expect_ints(r, 1, "aggregates header");
  if (head[0] < 1) throw parse_error("aggregate dimension must be >= 1");
  JdmAggregates a;
  a.class_sizes = detail::expect_ints(r, static_cast<std::size_t>(head[0]), "class sizes");
  a.d2_totals = detail::expect_ints(r, static_cast<std::size_t>(head[0]), "D2 totals");
  detail::expect_eof(r, "aggregates");
  for (i64 v : a.class_sizes)
    if (v < 0) throw parse_error("negative class size");
  for (i64 v : a.d2_totals)
    if (v < 0) throw parse_error("negative D2 total");
  return a;
}

inline void serialize_jdm_aggregates(const JdmAggregates& a, std::ostream& out) {
  out << a.class_sizes.size() << '\n';
  for (std::size_t i = 0; i < a.class_sizes.size(); ++i)
    out << a.class_sizes[i] << (i + 1 == a.class_sizes.size() ? '\n' : ' ');
  for (std::size_t i = 0; i < a.d2_totals.size(); ++i)
    out << a.d2_totals[i] << (i + 1 == a.d2_totals.size() ? '\n' : ' ');
}

// ---- assignments: one line "item class" per item ----
// Used both for basket assignments and for triple partitions (class =
// triple index).

inline BasketAssignment parse_assignment(std::istream& in) {
  detail::line_reader r(in);
  std::string line;
  std::vector<std::pair<int, int>> entries;
  while (r.next(line)) {
    auto vs = detail::parse_ints(line, "assignment line");
    if (vs.size() != 2) throw parse_error("assignment line must be 'item basket'");
    entries.emplace_back(detail::to_vertex(vs[0], "assignment"),
                         detail::to_vertex(vs[1], "assignment"));
  }
  std::vector<int> basket_of(entries.size(), -1);
  for (auto [item, basket] : entries) {
    if (item < 0 || item >= static_cast<int>(entries.size()))
      throw parse_error("assignment item index out of range");
    if (basket_of[static_cast<std::size_t>(item)] != -1)
      throw parse_error("duplicate item in assignment");
    basket_of[static_cast<std::size_t>(item)] = basket;
  }
  return BasketAssignment{basket_of};
}

inline void serialize_assignment(const BasketAssignment& a, std::ostream& out) {
  for (std::size_t i = 0; i < a.basket_of.size(); ++i)
    out << i << ' ' << a.basket_of[i] << '\n';
}

inline TriplePartition parse_partition(std::istream& in) {
  BasketAssignment a = parse_assignment(in);
  if (a.basket_of.size() % 3 != 0) throw parse_error("partition must cover 3m items");
  const std::size_t m = a.basket_of.size() / 3;
  std::vector<std::vector<int>> classes(m);
  for (std::size_t i = 0; i < a.basket_of.size(); ++i) {
    int c = a.basket_of[i];
    if (c < 0 || c >= static_cast<int>(m)) throw parse_error("partition class out of range");
    classes[static_cast<std::size_t>(c)].push_back(static_cast<int>(i));
  }
  TriplePartition p;
  for (const auto& cls : classes) {
    if (cls.size() != 3) throw parse_error("partition class must have exactly 3 items");
    p.triples.push_back({cls[0], cls[1], cls[2]});
  }
  return p;
}

inline void serialize_partition(const TriplePartition& p, std::ostream& out) {
  std::vector<std::pair<int, int>> entries;
  for (std::size_t t = 0; t < p.triples.size(); ++t)
    for (int item : p.triples[t]) entries.emplace_back(item, static_cast<int>(t));
  std::sort(entries.begin(), entries.end());
  for (auto [item, cls] : entries) out << item << ' ' << cls << '\n';
}

// string-based conveniences, used heavily in tests

template <class T, class Fn>
T parse_string(const std::string& text, Fn fn) {
  std::istringstream in(text);
  return fn(in);
}

template <class T, class Fn>
std::string serialize_string(const T& value, Fn fn) {
  std::ostringstream out;
  fn(value, out);
  return out.str();
}

} // namespace degseq
