#pragma once
// Orientations of a weighted multigraph: one (tail, head) arc per edge
// occurrence, indexed in step with the graph's edge list.  Loops and opposed
// parallel pairs count as directed cycles, so acyclic orientations exist only
// for loopless graphs.

#include <functional>
#include <set>
#include <vector>

#include "csf/graph.hpp"

namespace csf {

struct Orientation {
  VertexWeightedGraph g;
  std::vector<std::pair<int, int>> arcs;  // arcs[i] orients g.edges[i]

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return a.g == b.g && a.arcs == b.arcs;
  }
};

// Orientation from a bitmask: bit i clear orients edges[i] as stored
// (min -> max), bit i set reverses it.
inline Orientation orient_from_mask(const VertexWeightedGraph& g, std::uint32_t mask) {
  if (g.edges.size() > 32) throw std::invalid_argument("orient_from_mask: too many edges");
  Orientation o{g, {}};
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    auto [a, b] = g.edges[i];
    o.arcs.push_back(mask >> i & 1 ? std::make_pair(b, a) : std::make_pair(a, b));
  }
  return o;
}

inline bool is_acyclic(const Orientation& o) {
  for (auto [t, h] : o.arcs)
    if (t == h) return false;  // a loop is a directed cycle
  // DFS cycle detection over the arc digraph (parallel same-direction arcs
  // collapse; an opposed pair is a 2-cycle and is found by the DFS)
  int n = o.g.n();
  std::vector<std::vector<int>> out(n);
  for (auto [t, h] : o.arcs) out[o.g.index_of(t)].push_back(o.g.index_of(h));
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::function<bool(int)> dfs = [&](int v) -> bool {
    state[v] = 1;
    for (int u : out[v]) {
      if (state[u] == 1) return false;
      if (state[u] == 0 && !dfs(u)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (int v = 0; v < n; ++v)
    if (state[v] == 0 && !dfs(v)) return false;
  return true;
}

// All acyclic orientations: the 2^{|E|} candidates, filtered.  An edgeless
// graph has exactly one (empty) orientation; any loop kills them all.
inline std::vector<Orientation> acyclic_orientations(const VertexWeightedGraph& g) {
  if (g.edges.size() > 24)
    throw std::invalid_argument("acyclic_orientations: more than 24 edges");
  std::vector<Orientation> out;
  if (g.has_loop()) return out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << g.edges.size()); ++mask) {
    Orientation o = orient_from_mask(g, mask);
    if (is_acyclic(o)) out.push_back(std::move(o));
  }
  return out;
}

// Sinks: vertices that are the tail of no arc (every vertex of an edgeless
// graph is a sink).  Returned as sorted ids.
inline std::vector<int> sinks(const Orientation& o) {
  std::set<int> tails;
  for (auto [t, h] : o.arcs) { (void)h; tails.insert(t); }
  std::vector<int> out;
  for (int id : o.g.ids)
    if (!tails.count(id)) out.push_back(id);
  return out;
}

inline Orientation flip_orientation(const Orientation& o, int k) {
  if (k < 0 || k >= static_cast<int>(o.arcs.size()))
    throw std::invalid_argument("flip_orientation: edge index out of range");
  Orientation f = o;
  std::swap(f.arcs[k].first, f.arcs[k].second);
  return f;
}

inline Orientation delete_edge_oriented(const Orientation& o, int k) {
  if (k < 0 || k >= static_cast<int>(o.arcs.size()))
    throw std::invalid_argument("delete_edge_oriented: edge index out of range");
  Orientation d{delete_edge_at(o.g, k), o.arcs};
  d.arcs.erase(d.arcs.begin() + k);
  return d;
}

// Orientation of G/e induced by an orientation of G:
//   - edges untouched by the contraction keep their arc;
//   - an edge from v to either contracted endpoint keeps v's head/tail role,
//     with the merged vertex taking the other end;
//   - parallel copies of the contracted pair (other than the pivot) become
//     loops at the merged vertex, oriented onto themselves.
// Contracting a loop is deletion.
inline Orientation contract_orientation(const Orientation& o, int k) {
  if (k < 0 || k >= static_cast<int>(o.arcs.size()))
    throw std::invalid_argument("contract_orientation: edge index out of range");
  auto [v1, v2] = o.g.edges[k];
  if (v1 == v2) return delete_edge_oriented(o, k);
  detail::ContractionPlan plan = detail::plan_contraction(o.g, k);
  int star = plan.contracted.max_id();
  auto mapped = [&](int x) { return (x == v1 || x == v2) ? star : x; };
  Orientation c{plan.contracted, {}};
  for (int i : plan.surviving)
    c.arcs.emplace_back(mapped(o.arcs[i].first), mapped(o.arcs[i].second));
  return c;
}

}  // namespace csf
