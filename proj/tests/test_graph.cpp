#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "csf/graph.hpp"

using namespace csf;

TEST_CASE("construction validates and normalizes") {
  VertexWeightedGraph g = make_graph({{0, 1}, {2, 3}}, {{2, 0}});
  CHECK(g.n() == 2);
  CHECK(g.total_weight() == 4);
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 2}});
  CHECK(g.weight_of(2) == 3);
  CHECK(g.max_id() == 2);
  CHECK_FALSE(g.has_loop());
  CHECK(g.is_simple());

  CHECK_THROWS_AS(make_graph({{0, 1}, {0, 2}}, {}), std::invalid_argument);   // dup id
  CHECK_THROWS_AS(make_graph({{0, 0}}, {}), std::invalid_argument);           // weight < 1
  CHECK_THROWS_AS(make_graph({{0, 1}}, {{0, 1}}), std::invalid_argument);     // missing endpoint
  CHECK_THROWS_AS(make_graph({{-1, 1}}, {}), std::invalid_argument);          // negative id

  VertexWeightedGraph loop = make_graph_n({1, 1}, {{1, 1}, {0, 1}});
  CHECK(loop.has_loop());
  CHECK_FALSE(loop.is_simple());
  VertexWeightedGraph multi = make_graph_n({1, 1}, {{0, 1}, {1, 0}});
  CHECK(multi.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 1}});
  CHECK_FALSE(multi.is_simple());
}

TEST_CASE("edge deletion and lookup") {
  VertexWeightedGraph g = make_graph_n({1, 1, 1}, {{0, 1}, {1, 2}});
  CHECK(find_edge(g, {1, 0}) == 0);
  CHECK(find_edge(g, {2, 1}) == 1);
  CHECK_THROWS_AS(find_edge(g, {0, 2}), std::invalid_argument);
  VertexWeightedGraph h = delete_edge_at(g, 0);
  CHECK(h.n() == 3);
  CHECK(h.edges == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK_THROWS_AS(delete_edge_at(g, 2), std::invalid_argument);
}

TEST_CASE("contraction merges weights and keeps parallel copies as loops") {
  VertexWeightedGraph p3 = make_graph_n({1, 2, 4}, {{0, 1}, {1, 2}});
  VertexWeightedGraph c = contract_edge_at(p3, 0);
  CHECK(c.n() == 2);
  CHECK(c.ids == std::vector<int>{2, 3});       // star vertex gets a fresh id
  CHECK(c.weight_of(3) == 3);
  CHECK(c.weight_of(2) == 4);
  CHECK(c.edges == std::vector<std::pair<int, int>>{{2, 3}});

  VertexWeightedGraph doubled = make_graph_n({1, 1}, {{0, 1}, {0, 1}});
  VertexWeightedGraph dc = contract_edge_at(doubled, 0);
  CHECK(dc.n() == 1);
  CHECK(dc.weights == std::vector<int>{2});
  CHECK(dc.edges == std::vector<std::pair<int, int>>{{2, 2}});  // surviving copy -> loop

  VertexWeightedGraph k3 = make_graph_n({1, 1, 1}, {{0, 1}, {0, 2}, {1, 2}});
  VertexWeightedGraph kc = contract_edge_at(k3, 0);
  CHECK(kc.n() == 2);
  CHECK(kc.edges == std::vector<std::pair<int, int>>{{2, 3}, {2, 3}});  // double edge

  // contracting a loop is deletion
  VertexWeightedGraph lg = make_graph_n({2, 1}, {{0, 0}, {0, 1}});
  CHECK(contract_edge_at(lg, 0) == delete_edge_at(lg, 0));
}

TEST_CASE("simple contraction dedupes and drops loops") {
  VertexWeightedGraph k3 = make_graph_n({1, 1, 1}, {{0, 1}, {0, 2}, {1, 2}});
  VertexWeightedGraph sc = simple_contract(k3, {0, 1});
  CHECK(sc.n() == 2);
  CHECK(sc.edges == std::vector<std::pair<int, int>>{{2, 3}});
  VertexWeightedGraph doubled = make_graph_n({1, 1}, {{0, 1}, {0, 1}});
  CHECK_THROWS_AS(simple_contract(doubled, {0, 1}), std::invalid_argument);
}

TEST_CASE("component types of edge subsets") {
  VertexWeightedGraph p3 = make_graph_n({1, 1, 1}, {{0, 1}, {1, 2}});
  CHECK(lambda_of_subset_mask(p3, 0b11) == Partition({3}));
  CHECK(lambda_of_subset_mask(p3, 0b01) == Partition({2, 1}));
  CHECK(lambda_of_subset_mask(p3, 0b00) == Partition({1, 1, 1}));
  VertexWeightedGraph w = make_graph_n({2, 1, 3}, {{0, 1}, {1, 2}});
  CHECK(lambda_of_subset(w, {0}) == Partition({3, 3}));
  CHECK(lambda_of_subset(w, {0, 1}) == Partition({6}));
  // loops connect nothing new but are valid subset members
  VertexWeightedGraph lg = make_graph_n({2, 1}, {{0, 0}, {0, 1}});
  CHECK(lambda_of_subset(lg, {0}) == Partition({2, 1}));
}

TEST_CASE("connectivity and disjoint union") {
  CHECK(is_connected(make_graph_n({1}, {})));
  CHECK_FALSE(is_connected(make_graph_n({1, 1}, {})));
  CHECK(is_connected(make_graph_n({1, 1, 1}, {{0, 1}, {1, 2}})));
  VertexWeightedGraph a = make_graph({{0, 2}}, {});
  VertexWeightedGraph b = make_graph_n({1, 1}, {{0, 1}});
  VertexWeightedGraph u = disjoint_union(a, b);
  CHECK(u.n() == 3);
  CHECK(u.ids == std::vector<int>{0, 1, 2});
  CHECK(u.edges == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(u.weight_of(0) == 2);
  CHECK(with_unit_weights(u).total_weight() == 3);
}

TEST_CASE("stable partitions by type") {
  VertexWeightedGraph k3 = make_graph_n({1, 1, 1}, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(stable_partitions(k3, Partition{1, 1, 1}) == 1);
  CHECK(stable_partitions(k3, Partition{2, 1}) == 0);
  CHECK(stable_partitions(k3, Partition{3}) == 0);

  VertexWeightedGraph p3 = make_graph_n({1, 1, 1}, {{0, 1}, {1, 2}});
  CHECK(stable_partitions(p3, Partition{2, 1}) == 1);
  CHECK(stable_partitions(p3, Partition{1, 1, 1}) == 1);

  VertexWeightedGraph e21 = make_graph_n({2, 1}, {{0, 1}});
  CHECK(stable_partitions(e21, Partition{2, 1}) == 1);
  CHECK(stable_partitions(e21, Partition{3}) == 0);

  VertexWeightedGraph lg = make_graph_n({1}, {{0, 0}});
  CHECK(stable_partitions(lg, Partition{1}) == 0);  // looped vertex fits nowhere

  // blocks come back as vertex ids
  enumerate_stable_partitions(p3, Partition{2, 1}, [&](const std::vector<std::vector<int>>& blocks) {
    REQUIRE(blocks.size() == 2);
    std::set<std::set<int>> got;
    for (auto& blk : blocks) got.insert(std::set<int>(blk.begin(), blk.end()));
    CHECK(got == std::set<std::set<int>>{{0, 2}, {1}});
  });
}

TEST_CASE("connected partition types") {
  VertexWeightedGraph p3 = make_graph_n({1, 1, 1}, {{0, 1}, {1, 2}});
  CHECK(connected_partition_types(p3) ==
        std::set<Partition>{Partition{3}, Partition{2, 1}, Partition{1, 1, 1}});
  VertexWeightedGraph e2 = make_graph_n({1, 1}, {});
  CHECK(connected_partition_types(e2) == std::set<Partition>{Partition{1, 1}});
  VertexWeightedGraph w = make_graph_n({2, 1}, {{0, 1}});
  CHECK(connected_partition_types(w) == std::set<Partition>{Partition{3}, Partition{2, 1}});
}

TEST_CASE("canonical keys are isomorphism invariants") {
  VertexWeightedGraph a = make_graph_n({1, 2, 1}, {{0, 1}, {1, 2}});
  // same path relabeled: middle vertex is 0 here
  VertexWeightedGraph b = make_graph_n({2, 1, 1}, {{0, 1}, {0, 2}});
  REQUIRE(canonical_key(a).has_value());
  CHECK(canonical_key(a) == canonical_key(b));
  // moving the heavy vertex to the end of the path changes the class
  VertexWeightedGraph c = make_graph_n({1, 1, 2}, {{0, 1}, {1, 2}});
  CHECK(canonical_key(a) != canonical_key(c));
  // parallel edges distinguish multigraphs
  VertexWeightedGraph d1 = make_graph_n({1, 1}, {{0, 1}});
  VertexWeightedGraph d2 = make_graph_n({1, 1}, {{0, 1}, {0, 1}});
  CHECK(canonical_key(d1) != canonical_key(d2));
}

TEST_CASE("canonical keys are stable under random relabeling") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<int> weights(n);
    for (int& w : weights) w = 1 + static_cast<int>(rng() % 3);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        if (rng() % 3 == 0) edges.push_back({i, j});   // includes loops
        if (i < j && rng() % 4 == 0) edges.push_back({i, j});  // parallels
      }
    VertexWeightedGraph g = make_graph_n(weights, edges);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> pweights(n);
    for (int i = 0; i < n; ++i) pweights[perm[i]] = weights[i];
    std::vector<std::pair<int, int>> pedges;
    for (auto [x, y] : edges) pedges.push_back({perm[x], perm[y]});
    VertexWeightedGraph h = make_graph_n(pweights, pedges);
    CHECK(canonical_key(g) == canonical_key(h));
  }
}

TEST_CASE("canonical key respects the vertex bound") {
  std::vector<int> weights(11, 1);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 10; ++i) edges.push_back({i, i + 1});
  CHECK_FALSE(canonical_key(make_graph_n(weights, edges)).has_value());
  CHECK(canonical_key(make_graph_n({1}, {})).has_value());
}
