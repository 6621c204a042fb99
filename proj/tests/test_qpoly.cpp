#include <catch2/catch_amalgamated.hpp>

#include "csf/corpus.hpp"
#include "csf/qpoly.hpp"

using namespace csf;

namespace {

// coefficients of the q-polynomial after setting every x_i = 1
std::vector<Int> at_all_ones(const QPolynomial& p) {
  std::vector<Int> acc;
  for (const auto& [exps, qc] : p.terms) {
    if (qc.size() > acc.size()) acc.resize(qc.size(), 0);
    for (std::size_t i = 0; i < qc.size(); ++i) acc[i] += qc[i];
  }
  return acc;
}

Int eval_q(const std::vector<Int>& coeffs, int q) {
  Int v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * q + coeffs[i];
  return v;
}

}  // namespace

TEST_CASE("directed three-path q-profile with three colors") {
  VertexWeightedGraph p3 = make_graph_n({1, 1, 1}, {{0, 1}, {1, 2}});
  Orientation gamma = orient_from_mask(p3, 0);  // 0->1->2: one source, one sink
  REQUIRE(sinks(gamma) == std::vector<int>{2});

  QPolynomial x = quasi_csf(gamma, 3);
  CHECK(at_all_ones(x) == std::vector<Int>{1, 10, 1});

  QPolynomial del = quasi_csf(delete_edge_oriented(gamma, 0), 3);  // drop the source edge
  CHECK(at_all_ones(del) == std::vector<Int>{9, 9});

  QPolynomial con = quasi_csf(contract_orientation(gamma, 0), 3);
  CHECK(at_all_ones(con) == std::vector<Int>{3, 3});

  QPolynomial flipped = quasi_csf(flip_orientation(gamma, 0), 3);
  CHECK(at_all_ones(flipped) == std::vector<Int>{5, 2, 5});

  FlipCheck fc = verify_flip_relation(gamma, 0, 3);
  CHECK(fc.pass);
  CHECK(at_all_ones(fc.lhs) == std::vector<Int>{6, 12, 6});

  // (1+q) divides the deletion and contraction sides but not the q-profile itself
  CHECK(eval_q(at_all_ones(del), -1) == 0);
  CHECK(eval_q(at_all_ones(con), -1) == 0);
  CHECK(eval_q(at_all_ones(x), -1) != 0);
}

TEST_CASE("ascents count per edge occurrence and exponents carry weights") {
  VertexWeightedGraph doubled = make_graph_n({1, 1}, {{0, 1}, {0, 1}});
  QPolynomial q2 = quasi_csf(orient_from_mask(doubled, 0), 2);
  REQUIRE(q2.terms.count({1, 1}) == 1);
  CHECK(q2.terms.at({1, 1}) == std::vector<Int>{1, 0, 1});

  VertexWeightedGraph e21 = make_graph_n({2, 1}, {{0, 1}});
  QPolynomial qw = quasi_csf(orient_from_mask(e21, 0), 2);
  CHECK(qw.terms.at({2, 1}) == std::vector<Int>{0, 1});
  CHECK(qw.terms.at({1, 2}) == std::vector<Int>{1});

  CHECK(quasi_csf(orient_from_mask(make_graph_n({1}, {{0, 0}}), 0), 3).terms.empty());
}

TEST_CASE("setting q to one recovers the truncated chromatic function") {
  std::vector<VertexWeightedGraph> gs = {
      make_graph_n({1, 1, 1}, {{0, 1}, {1, 2}}),
      make_graph_n({1, 1, 1}, {{0, 1}, {0, 2}, {1, 2}}),
      make_graph_n({2, 1}, {{0, 1}}),
      make_graph_n({1, 2, 1}, {{0, 1}, {1, 2}, {1, 2}}),
  };
  for (const auto& g : gs) {
    int k = g.total_weight();
    MonomialPoly expect = truncate_to_vars(csf_delcon(g), k);
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << g.edges.size()); ++mask)
      CHECK(qp_at_q_one(quasi_csf(orient_from_mask(g, mask), k)) == expect);
  }
}

TEST_CASE("q-polynomial arithmetic") {
  VertexWeightedGraph e11 = make_graph_n({1, 1}, {{0, 1}});
  QPolynomial a = quasi_csf(orient_from_mask(e11, 0), 2);
  QPolynomial b = qp_one_plus_q(a);
  CHECK(at_all_ones(b) == std::vector<Int>{1, 2, 1});
  CHECK(qp_sub(b, b).terms.empty());
  QPolynomial tripled = qp_add(a, qp_scale(a, 2));
  CHECK(at_all_ones(tripled) == std::vector<Int>{3, 3});
  CHECK(qp_sub(tripled, qp_scale(a, 3)).terms.empty());
}

TEST_CASE("flip relation holds exhaustively at small scale") {
  CorpusSpec spec;
  spec.max_n = 3;
  spec.max_weight = 1;
  for_each_graph(spec, [&](const VertexWeightedGraph& g) {
    int k = g.total_weight();
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << g.edges.size()); ++mask) {
      Orientation o = orient_from_mask(g, mask);
      for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
        CHECK(verify_flip_relation(o, e, k).pass);
    }
  });
  for (const VertexWeightedGraph& g : multigraph_family()) {
    int k = g.total_weight();
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << g.edges.size()); ++mask) {
      Orientation o = orient_from_mask(g, mask);
      for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
        CHECK(verify_flip_relation(o, e, k).pass);
    }
  }
  // a sample of four-vertex instances at full depth
  std::vector<VertexWeightedGraph> four = {
      make_graph_n({1, 1, 1, 1}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}),          // C4
      make_graph_n({1, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}}),                  // star
      make_graph_n({1, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}),  // K4 minus an edge
  };
  for (const auto& g : four) {
    int k = g.total_weight();
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << g.edges.size()); ++mask) {
      Orientation o = orient_from_mask(g, mask);
      for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
        CHECK(verify_flip_relation(o, e, k).pass);
    }
  }
}
