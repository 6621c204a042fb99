#include <catch2/catch_amalgamated.hpp>

#include "csf/orientation.hpp"

using namespace csf;

namespace {
VertexWeightedGraph k3() { return make_graph_n({1, 1, 1}, {{0, 1}, {0, 2}, {1, 2}}); }
VertexWeightedGraph p3() { return make_graph_n({1, 1, 1}, {{0, 1}, {1, 2}}); }
}  // namespace

TEST_CASE("orientation from mask") {
  Orientation o = orient_from_mask(p3(), 0b10);
  CHECK(o.arcs == std::vector<std::pair<int, int>>{{0, 1}, {2, 1}});
  CHECK(orient_from_mask(p3(), 0).arcs == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("acyclicity detects directed cycles, loops, and opposed pairs") {
  // 0->1, 1->2, 2->0 on the triangle: edges (0,1),(0,2),(1,2), reverse (0,2)
  CHECK_FALSE(is_acyclic(orient_from_mask(k3(), 0b010)));
  CHECK(is_acyclic(orient_from_mask(k3(), 0b000)));
  VertexWeightedGraph lg = make_graph_n({1}, {{0, 0}});
  CHECK_FALSE(is_acyclic(orient_from_mask(lg, 0)));
  VertexWeightedGraph doubled = make_graph_n({1, 1}, {{0, 1}, {0, 1}});
  CHECK_FALSE(is_acyclic(orient_from_mask(doubled, 0b01)));  // opposed pair
  CHECK(is_acyclic(orient_from_mask(doubled, 0b00)));        // same direction
}

TEST_CASE("acyclic orientation counts") {
  CHECK(acyclic_orientations(k3()).size() == 6);
  CHECK(acyclic_orientations(p3()).size() == 4);
  CHECK(acyclic_orientations(make_graph_n({1, 1, 1}, {})).size() == 1);
  CHECK(acyclic_orientations(make_graph_n({2}, {{0, 0}})).empty());
  CHECK(acyclic_orientations(make_graph_n({1, 1}, {{0, 1}, {0, 1}})).size() == 2);
  CHECK(acyclic_orientations(make_graph_n({1, 1}, {{0, 1}, {0, 1}, {0, 1}})).size() == 2);
}

TEST_CASE("sinks") {
  CHECK(sinks(orient_from_mask(p3(), 0b00)) == std::vector<int>{2});
  CHECK(sinks(orient_from_mask(p3(), 0b10)) == std::vector<int>{1});
  CHECK(sinks(orient_from_mask(p3(), 0b01)) == std::vector<int>{0, 2});
  CHECK(sinks(orient_from_mask(make_graph_n({1, 1}, {}), 0)) == std::vector<int>{0, 1});
  for (const Orientation& o : acyclic_orientations(k3())) CHECK(sinks(o).size() == 1);
}

TEST_CASE("flip and oriented deletion") {
  Orientation o = orient_from_mask(p3(), 0);
  Orientation f = flip_orientation(o, 1);
  CHECK(f.arcs == std::vector<std::pair<int, int>>{{0, 1}, {2, 1}});
  CHECK(flip_orientation(f, 1) == o);
  Orientation d = delete_edge_oriented(o, 0);
  CHECK(d.g.edges == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(d.arcs == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("orientation contraction follows the endpoint-role rules") {
  // triangle 0->1, 0->2, 1->2; contract the 0-1 edge
  Orientation o = orient_from_mask(k3(), 0);
  Orientation c = contract_orientation(o, 0);
  CHECK(c.g.ids == std::vector<int>{2, 3});
  CHECK(c.g.edges == std::vector<std::pair<int, int>>{{2, 3}, {2, 3}});
  CHECK(c.arcs == std::vector<std::pair<int, int>>{{3, 2}, {3, 2}});  // both tails at the star
  CHECK(is_acyclic(c));

  // directed path 0->2->1 between the endpoints of (0,1): contraction gives a 2-cycle
  Orientation path = orient_from_mask(k3(), 0b100);  // arcs (0,1),(0,2),(2,1)
  Orientation pc = contract_orientation(path, 0);
  CHECK(pc.arcs == std::vector<std::pair<int, int>>{{3, 2}, {2, 3}});
  CHECK_FALSE(is_acyclic(pc));

  // a parallel copy of the contracted pair becomes a loop at the star
  VertexWeightedGraph doubled = make_graph_n({1, 2}, {{0, 1}, {0, 1}});
  Orientation od = orient_from_mask(doubled, 0);
  Orientation cd = contract_orientation(od, 0);
  CHECK(cd.g.weights == std::vector<int>{3});
  CHECK(cd.arcs == std::vector<std::pair<int, int>>{{2, 2}});
  CHECK_FALSE(is_acyclic(cd));

  // contracting a loop deletes it, keeping the rest aligned
  VertexWeightedGraph lg = make_graph_n({2, 1}, {{0, 0}, {0, 1}});
  Orientation ol = orient_from_mask(lg, 0b10);
  Orientation cl = contract_orientation(ol, 0);
  CHECK(cl.g == delete_edge_at(lg, 0));
  CHECK(cl.arcs == std::vector<std::pair<int, int>>{{1, 0}});
}

TEST_CASE("deletion-contraction counts acyclic orientations") {
  auto check_graph = [](const VertexWeightedGraph& g) {
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      if (g.edges[e].first == g.edges[e].second) continue;
      std::size_t a = acyclic_orientations(g).size();
      std::size_t del = acyclic_orientations(delete_edge_at(g, e)).size();
      std::size_t con = acyclic_orientations(contract_edge_at(g, e)).size();
      CHECK(a == del + con);
    }
  };
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << pairs.size()); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) edges.push_back(pairs[i]);
      check_graph(make_graph_n(std::vector<int>(n, 1), edges));
    }
  }
  check_graph(make_graph_n({1, 1}, {{0, 1}, {0, 1}}));
  check_graph(make_graph_n({1, 1, 1}, {{0, 1}, {0, 1}, {1, 2}, {0, 2}}));
  check_graph(make_graph_n({1, 2}, {{0, 0}, {0, 1}}));
}
