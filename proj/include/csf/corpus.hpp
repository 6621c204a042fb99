#pragma once
// Instance generators for the sweeps: exhaustive labeled graphs with bounded
// weights, a fixed multigraph family, Pruefer-coded labeled trees, and the
// search for weight-sequence pairs with equal functions.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "csf/csf_engine.hpp"

namespace csf {

struct CorpusSpec {
  int max_n = 4;        // vertex counts 1..max_n (or exactly exact_n if set)
  int exact_n = -1;
  int max_weight = 1;   // weights range over 1..max_weight
  bool connected_only = false;
};

// Visit every labeled simple graph matching the spec: all edge subsets of the
// complete graph crossed with all weight tuples.
inline void for_each_graph(const CorpusSpec& spec,
                           const std::function<void(const VertexWeightedGraph&)>& visit) {
  int lo = spec.exact_n >= 0 ? spec.exact_n : 1;
  int hi = spec.exact_n >= 0 ? spec.exact_n : spec.max_n;
  for (int n = lo; n <= hi; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    std::vector<int> weights(n, 1);
    std::function<void(int)> weight_rec = [&](int v) {
      if (v == n) {
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << pairs.size()); ++mask) {
          std::vector<std::pair<int, int>> edges;
          for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) edges.push_back(pairs[i]);
          VertexWeightedGraph g = make_graph_n(weights, edges);
          if (spec.connected_only && !is_connected(g)) continue;
          visit(g);
        }
        return;
      }
      for (int w = 1; w <= spec.max_weight; ++w) {
        weights[v] = w;
        weight_rec(v + 1);
      }
    };
    weight_rec(0);
  }
}

inline std::size_t corpus_size(const CorpusSpec& spec) {
  std::size_t total = 0;
  for_each_graph(spec, [&](const VertexWeightedGraph&) { ++total; });
  return total;
}

// Fixed family exercising loops and parallel edges.
inline std::vector<VertexWeightedGraph> multigraph_family() {
  return {
      make_graph_n({1}, {{0, 0}}),                                   // single loop
      make_graph_n({2}, {{0, 0}}),                                   // heavy loop
      make_graph_n({1, 2}, {{0, 0}, {0, 1}}),                        // loop + pendant
      make_graph_n({1, 1}, {{0, 1}, {0, 1}}),                        // doubled edge
      make_graph_n({2, 1}, {{0, 1}, {0, 1}}),                        // doubled edge, mixed weights
      make_graph_n({1, 1}, {{0, 1}, {0, 1}, {0, 1}}),                // tripled edge
      make_graph_n({1, 2, 1}, {{0, 1}, {1, 2}, {1, 2}}),             // path, doubled step
      make_graph_n({1, 1, 1}, {{0, 1}, {0, 1}, {1, 2}, {0, 2}}),     // triangle + doubled side
      make_graph_n({1, 1, 2}, {{0, 1}, {1, 2}, {0, 2}, {2, 2}}),     // triangle + loop
  };
}

// Decode a Pruefer sequence over {0..n-1} into the edge list of its labeled tree.
inline std::vector<std::pair<int, int>> pruefer_decode(int n, const std::vector<int>& seq) {
  std::vector<int> degree(n, 1);
  for (int s : seq) degree[s] += 1;
  std::vector<std::pair<int, int>> edges;
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int s : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({leaf, s});
    if (--degree[s] == 1) leaves.insert(s);
  }
  int u = *leaves.begin(), v = *std::next(leaves.begin());
  edges.push_back({u, v});
  return edges;
}

// All labeled trees on n vertices (n^{n-2} of them).
inline std::vector<std::vector<std::pair<int, int>>> labeled_trees(int n) {
  if (n <= 0) throw std::invalid_argument("labeled_trees: n must be positive");
  if (n == 1) return {{}};
  if (n == 2) return {{{0, 1}}};
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    out.push_back(pruefer_decode(n, seq));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    seq[i] += 1;
  }
  return out;
}

// ---- closed-form reference families ------------------------------------------------

// Complete graph on vertices weighted by the parts of lambda.
inline VertexWeightedGraph complete_weighted(const Partition& lam) {
  int n = lam.length();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return make_graph_n(lam.parts, edges);
}

inline VertexWeightedGraph edgeless_weighted(const Partition& lam) {
  return make_graph_n(lam.parts, {});
}

// Disjoint union of unit-weight cliques of the given sizes.
inline VertexWeightedGraph clique_union(const std::vector<int>& sizes) {
  std::vector<int> weights;
  std::vector<std::pair<int, int>> edges;
  int base = 0;
  for (int s : sizes) {
    for (int i = 0; i < s; ++i) weights.push_back(1);
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j) edges.push_back({base + i, base + j});
    base += s;
  }
  return make_graph_n(weights, edges);
}

// ---- equal-function search over weighted trees ---------------------------------------

struct EqualClassMember {
  VertexWeightedGraph graph;
  std::string key;         // canonical label of the weighted graph
  std::string shape_key;   // canonical label of the underlying unit-weight tree
};

struct EqualClass {
  SymFunc value;                          // the shared function (p basis)
  std::string fingerprint;
  std::vector<EqualClassMember> members;  // pairwise non-isomorphic, equal functions
  bool crosses_shapes = false;            // members with different underlying trees
};

// Sweep all labeled trees on n vertices with weights in 1..max_weight, dedupe
// isomorphic copies by canonical key, bucket by fingerprint, then confirm
// equality exactly.  Returns only classes with at least two distinct members.
inline std::vector<EqualClass> find_equal_tree_classes(int n, int max_weight) {
  std::map<std::string, EqualClassMember> distinct;  // canonical key -> representative
  for (const auto& edges : labeled_trees(n)) {
    std::vector<int> weights(n, 1);
    std::function<void(int)> rec = [&](int v) {
      if (v == n) {
        VertexWeightedGraph g = make_graph_n(weights, edges);
        auto key = canonical_key(g);
        if (!key) throw std::runtime_error("find_equal_tree_classes: vertex bound exceeded");
        if (distinct.count(*key)) return;
        auto shape = canonical_key(with_unit_weights(g));
        distinct.emplace(*key, EqualClassMember{g, *key, shape.value_or("")});
        return;
      }
      for (int w = 1; w <= max_weight; ++w) {
        weights[v] = w;
        rec(v + 1);
      }
    };
    rec(0);
  }

  std::map<std::string, std::vector<const EqualClassMember*>> buckets;  // fingerprint
  std::map<std::string, SymFunc> values;                                // canonical key -> X
  for (const auto& [key, member] : distinct) {
    SymFunc x = csf_delcon(member.graph);
    values.emplace(key, x);
    buckets[csf_fingerprint(x)].push_back(&member);
  }

  std::vector<EqualClass> out;
  for (auto& [fp, group] : buckets) {
    if (group.size() < 2) continue;
    // exact-equality confirmation: split the bucket into true classes
    std::vector<EqualClass> classes;
    for (const EqualClassMember* m : group) {
      const SymFunc& x = values.at(m->key);
      bool placed = false;
      for (EqualClass& c : classes)
        if (c.value.coeffs == x.coeffs) {
          c.members.push_back(*m);
          placed = true;
          break;
        }
      if (!placed) classes.push_back(EqualClass{x, fp, {*m}, false});
    }
    for (EqualClass& c : classes) {
      if (c.members.size() < 2) continue;
      for (std::size_t i = 1; i < c.members.size(); ++i)
        if (c.members[i].shape_key != c.members[0].shape_key) c.crosses_shapes = true;
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace csf
