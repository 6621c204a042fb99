#pragma once
// Vertex-weighted multigraphs.  Vertex ids are opaque non-negative integers;
// every vertex carries a positive integer weight.  The edge multiset is kept
// as a sorted list of (min,max) id pairs; loops are stored as (v,v).  Edge
// occurrences are addressed by their index in that list, which is how
// parallel copies stay distinguishable.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "csf/partition.hpp"

namespace csf {

struct VertexWeightedGraph {
  std::vector<int> ids;                     // strictly increasing
  std::vector<int> weights;                 // parallel to ids, all >= 1
  std::vector<std::pair<int, int>> edges;   // sorted (min,max) pairs, loops allowed

  int n() const { return static_cast<int>(ids.size()); }
  int total_weight() const { return std::accumulate(weights.begin(), weights.end(), 0); }

  int index_of(int id) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) throw std::invalid_argument("unknown vertex id");
    return static_cast<int>(it - ids.begin());
  }
  int weight_of(int id) const { return weights[index_of(id)]; }
  int max_id() const { return ids.empty() ? -1 : ids.back(); }

  bool has_loop() const {
    for (auto [a, b] : edges)
      if (a == b) return true;
    return false;
  }
  bool is_simple() const {
    if (has_loop()) return false;
    for (std::size_t i = 1; i < edges.size(); ++i)
      if (edges[i] == edges[i - 1]) return false;
    return true;
  }

  friend bool operator==(const VertexWeightedGraph& a, const VertexWeightedGraph& b) {
    return a.ids == b.ids && a.weights == b.weights && a.edges == b.edges;
  }
};

// Build a graph from (id, weight) pairs and raw endpoint pairs, normalizing
// edge order and validating the invariants.
inline VertexWeightedGraph make_graph(std::vector<std::pair<int, int>> vertices,
                                      std::vector<std::pair<int, int>> edge_list) {
  std::sort(vertices.begin(), vertices.end());
  VertexWeightedGraph g;
  for (auto [id, w] : vertices) {
    if (id < 0) throw std::invalid_argument("make_graph: vertex ids must be non-negative");
    if (!g.ids.empty() && g.ids.back() == id)
      throw std::invalid_argument("make_graph: duplicate vertex id");
    if (w < 1) throw std::invalid_argument("make_graph: weights must be >= 1");
    g.ids.push_back(id);
    g.weights.push_back(w);
  }
  for (auto& [a, b] : edge_list) {
    if (a > b) std::swap(a, b);
    g.index_of(a);
    g.index_of(b);  // throws on unknown endpoint
  }
  std::sort(edge_list.begin(), edge_list.end());
  g.edges = std::move(edge_list);
  return g;
}

// Convenience: vertices 0..n-1 with the given weights.
inline VertexWeightedGraph make_graph_n(const std::vector<int>& weights,
                                        std::vector<std::pair<int, int>> edge_list) {
  std::vector<std::pair<int, int>> verts;
  for (std::size_t i = 0; i < weights.size(); ++i)
    verts.emplace_back(static_cast<int>(i), weights[i]);
  return make_graph(std::move(verts), std::move(edge_list));
}

inline VertexWeightedGraph delete_edge_at(const VertexWeightedGraph& g, int k) {
  if (k < 0 || k >= static_cast<int>(g.edges.size()))
    throw std::invalid_argument("delete_edge_at: edge index out of range");
  VertexWeightedGraph h = g;
  h.edges.erase(h.edges.begin() + k);
  return h;
}

inline int find_edge(const VertexWeightedGraph& g, std::pair<int, int> e) {
  if (e.first > e.second) std::swap(e.first, e.second);
  auto it = std::lower_bound(g.edges.begin(), g.edges.end(), e);
  if (it == g.edges.end() || *it != e) throw std::invalid_argument("find_edge: no such edge");
  return static_cast<int>(it - g.edges.begin());
}

namespace detail {

// Shared by edge contraction and orientation contraction: endpoint relabeling
// for contracting edge k, and the stable order in which surviving edges land.
struct ContractionPlan {
  VertexWeightedGraph contracted;
  std::vector<int> surviving;  // original edge indices, in the contracted edge order
};

inline ContractionPlan plan_contraction(const VertexWeightedGraph& g, int k) {
  if (k < 0 || k >= static_cast<int>(g.edges.size()))
    throw std::invalid_argument("contract_edge_at: edge index out of range");
  auto [v1, v2] = g.edges[k];
  if (v1 == v2) throw std::invalid_argument("plan_contraction: edge is a loop");
  int star = g.max_id() + 1;
  auto mapped = [&](int x) { return (x == v1 || x == v2) ? star : x; };

  ContractionPlan plan;
  std::vector<std::pair<int, int>> verts;
  for (int i = 0; i < g.n(); ++i)
    if (g.ids[i] != v1 && g.ids[i] != v2) verts.emplace_back(g.ids[i], g.weights[i]);
  verts.emplace_back(star, g.weight_of(v1) + g.weight_of(v2));

  std::vector<std::pair<std::pair<int, int>, int>> mapped_edges;  // (pair, original index)
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    if (i == k) continue;  // exactly one occurrence of the pivot disappears
    int a = mapped(g.edges[i].first), b = mapped(g.edges[i].second);
    if (a > b) std::swap(a, b);
    mapped_edges.push_back({{a, b}, i});
  }
  std::stable_sort(mapped_edges.begin(), mapped_edges.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });

  std::vector<std::pair<int, int>> edge_list;
  for (const auto& [pair, idx] : mapped_edges) {
    edge_list.push_back(pair);
    plan.surviving.push_back(idx);
  }
  plan.contracted = make_graph(std::move(verts), std::move(edge_list));
  return plan;
}

}  // namespace detail

// Contract edge k: the endpoints merge into a fresh vertex (id = max + 1)
// whose weight is the sum of theirs; other parallel copies of the contracted
// pair become loops at the new vertex.  Contracting a loop is deletion.
inline VertexWeightedGraph contract_edge_at(const VertexWeightedGraph& g, int k) {
  if (k < 0 || k >= static_cast<int>(g.edges.size()))
    throw std::invalid_argument("contract_edge_at: edge index out of range");
  if (g.edges[k].first == g.edges[k].second) return delete_edge_at(g, k);
  return detail::plan_contraction(g, k).contracted;
}

// Simple-graph contraction: contract, then discard loops and collapse
// parallel copies.  Only defined for simple graphs and non-loop edges.
inline VertexWeightedGraph simple_contract(const VertexWeightedGraph& g, std::pair<int, int> e) {
  if (!g.is_simple()) throw std::invalid_argument("simple_contract: graph is not simple");
  if (e.first == e.second) throw std::invalid_argument("simple_contract: edge is a loop");
  VertexWeightedGraph h = contract_edge_at(g, find_edge(g, e));
  std::vector<std::pair<int, int>> dedup;
  for (auto [a, b] : h.edges)
    if (a != b && (dedup.empty() || dedup.back() != std::make_pair(a, b))) dedup.emplace_back(a, b);
  h.edges = std::move(dedup);
  return h;
}

// ---- connectivity ------------------------------------------------------------

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

// Type of the spanning subgraph (V, S): component total weights, sorted.
// S is given as a bitmask over edge indices.
inline Partition lambda_of_subset_mask(const VertexWeightedGraph& g, std::uint32_t mask) {
  if (g.edges.size() > 32) throw std::invalid_argument("lambda_of_subset: too many edges");
  detail::UnionFind uf(g.n());
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (mask >> i & 1)
      uf.unite(g.index_of(g.edges[i].first), g.index_of(g.edges[i].second));
  std::map<int, int> comp_weight;
  for (int i = 0; i < g.n(); ++i) comp_weight[uf.find(i)] += g.weights[i];
  std::vector<int> parts;
  for (auto [root, w] : comp_weight) { (void)root; parts.push_back(w); }
  return partition_from_multiset(std::move(parts));
}

inline Partition lambda_of_subset(const VertexWeightedGraph& g, const std::vector<int>& subset) {
  std::uint32_t mask = 0;
  for (int i : subset) {
    if (i < 0 || i >= static_cast<int>(g.edges.size()))
      throw std::invalid_argument("lambda_of_subset: edge index out of range");
    mask |= std::uint32_t(1) << i;
  }
  return lambda_of_subset_mask(g, mask);
}

inline bool is_connected(const VertexWeightedGraph& g) {
  if (g.n() == 0) return true;
  detail::UnionFind uf(g.n());
  for (auto [a, b] : g.edges) uf.unite(g.index_of(a), g.index_of(b));
  for (int i = 1; i < g.n(); ++i)
    if (uf.find(i) != uf.find(0)) return false;
  return true;
}

// Disjoint union; the second operand's ids are shifted above the first's.
inline VertexWeightedGraph disjoint_union(const VertexWeightedGraph& a,
                                          const VertexWeightedGraph& b) {
  int shift = a.max_id() + 1;
  std::vector<std::pair<int, int>> verts;
  for (int i = 0; i < a.n(); ++i) verts.emplace_back(a.ids[i], a.weights[i]);
  for (int i = 0; i < b.n(); ++i) verts.emplace_back(b.ids[i] + shift, b.weights[i]);
  std::vector<std::pair<int, int>> edge_list = a.edges;
  for (auto [x, y] : b.edges) edge_list.emplace_back(x + shift, y + shift);
  return make_graph(std::move(verts), std::move(edge_list));
}

inline VertexWeightedGraph with_unit_weights(const VertexWeightedGraph& g) {
  VertexWeightedGraph h = g;
  std::fill(h.weights.begin(), h.weights.end(), 1);
  return h;
}

// ---- stable partitions --------------------------------------------------------

// Visit every partition of V into stable blocks (no edge inside a block) whose
// block-weight multiset equals lam.  Blocks are lists of vertex ids.  A vertex
// carrying a loop can never be placed, so loop graphs admit none.
inline void enumerate_stable_partitions(
    const VertexWeightedGraph& g, const Partition& lam,
    const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  if (lam.sum() != g.total_weight()) return;
  int maxpart = lam.empty() ? 0 : lam.parts[0];
  // adjacency over vertex indices (any multiplicity counts once; loops too)
  std::vector<std::vector<bool>> adj(g.n(), std::vector<bool>(g.n(), false));
  for (auto [a, b] : g.edges) adj[g.index_of(a)][g.index_of(b)] = adj[g.index_of(b)][g.index_of(a)] = true;

  std::vector<std::vector<int>> blocks;  // vertex indices
  std::vector<int> block_weight;
  std::function<void(int)> rec = [&](int v) {
    if (v == g.n()) {
      if (static_cast<int>(blocks.size()) != lam.length()) return;
      std::vector<int> ws(block_weight);
      std::sort(ws.begin(), ws.end(), std::greater<int>());
      if (ws != lam.parts) return;
      std::vector<std::vector<int>> out;
      for (const auto& blk : blocks) {
        out.emplace_back();
        for (int i : blk) out.back().push_back(g.ids[i]);
      }
      visit(out);
      return;
    }
    if (adj[v][v]) return;  // looped vertex: no stable block can take it
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      bool ok = block_weight[b] + g.weights[v] <= maxpart;
      for (int u : blocks[b])
        if (!ok || adj[u][v]) { ok = false; break; }
      if (!ok) continue;
      blocks[b].push_back(v);
      block_weight[b] += g.weights[v];
      rec(v + 1);
      blocks[b].pop_back();
      block_weight[b] -= g.weights[v];
    }
    if (static_cast<int>(blocks.size()) < lam.length() && g.weights[v] <= maxpart) {
      blocks.push_back({v});
      block_weight.push_back(g.weights[v]);
      rec(v + 1);
      blocks.pop_back();
      block_weight.pop_back();
    }
  };
  rec(0);
}

inline Int stable_partitions(const VertexWeightedGraph& g, const Partition& lam) {
  Int count = 0;
  enumerate_stable_partitions(g, lam, [&](const auto&) { count += 1; });
  return count;
}

// ---- connected partitions ------------------------------------------------------

struct ConnectedPartition {
  std::vector<std::vector<int>> blocks;  // vertex ids
  Partition type;                        // block total weights, sorted
};

// Visit every partition of V into blocks that induce connected subgraphs.
inline void enumerate_connected_partitions(
    const VertexWeightedGraph& g,
    const std::function<void(const ConnectedPartition&)>& visit) {
  std::vector<std::vector<bool>> adj(g.n(), std::vector<bool>(g.n(), false));
  for (auto [a, b] : g.edges) adj[g.index_of(a)][g.index_of(b)] = adj[g.index_of(b)][g.index_of(a)] = true;
  auto block_connected = [&](const std::vector<int>& blk) {
    if (blk.empty()) return true;
    std::vector<int> seen{blk[0]};
    std::vector<int> stack{blk[0]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : blk)
        if (adj[v][u] && std::find(seen.begin(), seen.end(), u) == seen.end()) {
          seen.push_back(u);
          stack.push_back(u);
        }
    }
    return seen.size() == blk.size();
  };
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> rec = [&](int v) {
    if (v == g.n()) {
      ConnectedPartition cp;
      std::vector<int> ws;
      for (const auto& blk : blocks) {
        if (!block_connected(blk)) return;
        int w = 0;
        cp.blocks.emplace_back();
        for (int i : blk) { cp.blocks.back().push_back(g.ids[i]); w += g.weights[i]; }
        ws.push_back(w);
      }
      cp.type = partition_from_multiset(std::move(ws));
      visit(cp);
      return;
    }
    // index-based: the recursive call grows and shrinks `blocks`
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(v);
      rec(v + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({v});
    rec(v + 1);
    blocks.pop_back();
  };
  rec(0);
}

// The set of achievable connected-partition types.
inline std::set<Partition> connected_partition_types(const VertexWeightedGraph& g) {
  std::set<Partition> types;
  enumerate_connected_partitions(g, [&](const ConnectedPartition& cp) { types.insert(cp.type); });
  return types;
}

// ---- canonical form -------------------------------------------------------------

inline int memo_vertex_bound() {
  if (const char* env = std::getenv("CSF_MEMO_BOUND")) return std::atoi(env);
  return 10;
}

namespace detail {

// Serialize (weights, adjacency) under one relabeling; ints fit in a byte at
// the scales this cache is allowed to see.
inline void encode_key(const VertexWeightedGraph& g, const std::vector<int>& pos,
                       std::string& out) {
  out.clear();
  out.push_back(static_cast<char>(g.n()));
  std::vector<int> w(g.n());
  for (int i = 0; i < g.n(); ++i) w[pos[i]] = g.weights[i];
  for (int x : w) out.push_back(static_cast<char>(x));
  std::vector<std::pair<int, int>> es;
  for (auto [a, b] : g.edges) {
    int x = pos[g.index_of(a)], y = pos[g.index_of(b)];
    es.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(es.begin(), es.end());
  out.push_back(static_cast<char>(es.size()));
  for (auto [x, y] : es) {
    out.push_back(static_cast<char>(x));
    out.push_back(static_cast<char>(y));
  }
}

}  // namespace detail

// Isomorphism-invariant key: the minimum over vertex relabelings of the
// serialized (weight sequence, adjacency multiset).  Only relabelings that
// sort the weight sequence ascending can attain the minimum, so the search
// permutes within equal-weight groups only.  Graphs larger than the memo
// bound report no key.
inline std::optional<std::string> canonical_key(const VertexWeightedGraph& g) {
  int n = g.n();
  if (n > memo_vertex_bound()) return std::nullopt;
  if (n > 120 || g.total_weight() > 120 || g.edges.size() > 120)
    throw std::invalid_argument("canonical_key: graph too large to serialize");

  // vertex indices sorted by weight; equal-weight runs are permuted
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.weights[a] < g.weights[b]; });
  std::vector<std::pair<int, int>> groups;  // [begin, end) runs of equal weight
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && g.weights[order[j]] == g.weights[order[i]]) ++j;
    groups.emplace_back(i, j);
    i = j;
  }

  std::string best, cur;
  std::vector<int> pos(n);
  std::function<void(std::size_t)> rec = [&](std::size_t gi) {
    if (gi == groups.size()) {
      for (int i = 0; i < n; ++i) pos[order[i]] = i;
      detail::encode_key(g, pos, cur);
      if (best.empty() || cur < best) best = cur;
      return;
    }
    auto [b, e] = groups[gi];
    std::sort(order.begin() + b, order.begin() + e);
    do rec(gi + 1);
    while (std::next_permutation(order.begin() + b, order.begin() + e));
  };
  rec(0);
  return best;
}

}  // namespace csf
