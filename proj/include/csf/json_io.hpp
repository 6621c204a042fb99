#pragma once
// JSON formats used by the CLI and report streams.
//
// Symmetric function: {"basis":"e","degree":3,"terms":[{"partition":[2,1],"num":1,"den":1},...]}
//   terms in canonical partition order; num/den emitted as JSON integers when
//   they fit in 64 bits and as decimal strings otherwise (both accepted).
// Graph: {"vertices":[{"id":0,"weight":1},...],"edges":[[0,1],[1,2],[0,1]],
//         "orientation":[[0,1],[2,1],[0,1]]}
//   edges may repeat (parallel copies) and loops are [v,v]; the optional
//   orientation lists (tail, head) per edge entry, in step with "edges".
// q-polynomial: {"k":3,"terms":[{"exponents":[1,1,1],"q_coeffs":[1,10,1]},...]}
//   q_coeffs ascending in the power of q.

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csf/graph.hpp"
#include "csf/orientation.hpp"
#include "csf/qpoly.hpp"
#include "csf/symfunc.hpp"

namespace csf {

using nlohmann::json;

inline json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

inline Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

inline json symfunc_to_json(const SymFunc& f) {
  json terms = json::array();
  for (const auto& [lam, c] : f.coeffs) {
    json t;
    t["partition"] = lam.parts;
    t["num"] = int_to_json(boost::multiprecision::numerator(c));
    t["den"] = int_to_json(boost::multiprecision::denominator(c));
    terms.push_back(std::move(t));
  }
  return json{{"basis", std::string(1, basis_char(f.basis))},
              {"degree", f.degree},
              {"terms", std::move(terms)}};
}

inline SymFunc symfunc_from_json(const json& j) {
  SymFunc f;
  std::string b = j.at("basis").get<std::string>();
  if (b.size() != 1) throw std::invalid_argument("basis must be one of m,p,e,h,s");
  f.basis = basis_from_char(b[0]);
  f.degree = j.at("degree").get<int>();
  for (const auto& t : j.at("terms")) {
    Partition lam(t.at("partition").get<std::vector<int>>());
    Rational c(int_from_json(t.at("num")), int_from_json(t.at("den")));
    if (c != 0) f.coeffs[lam] += c;
  }
  sf_normalize(f);
  return f;
}

inline json graph_to_json(const VertexWeightedGraph& g,
                          const std::optional<Orientation>& o = std::nullopt) {
  json verts = json::array();
  for (int i = 0; i < g.n(); ++i) verts.push_back(json{{"id", g.ids[i]}, {"weight", g.weights[i]}});
  json edges = json::array();
  for (auto [a, b] : g.edges) edges.push_back(json::array({a, b}));
  json out{{"vertices", std::move(verts)}, {"edges", std::move(edges)}};
  if (o) {
    if (o->g != g) throw std::invalid_argument("graph_to_json: orientation belongs to another graph");
    json arcs = json::array();
    for (auto [t, h] : o->arcs) arcs.push_back(json::array({t, h}));
    out["orientation"] = std::move(arcs);
  }
  return out;
}

struct LoadedGraph {
  VertexWeightedGraph g;
  std::optional<Orientation> orientation;
};

inline LoadedGraph graph_from_json(const json& j) {
  std::vector<std::pair<int, int>> verts;
  for (const auto& v : j.at("vertices"))
    verts.emplace_back(v.at("id").get<int>(), v.at("weight").get<int>());
  std::vector<std::pair<int, int>> raw;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge entries must be pairs");
    raw.emplace_back(e[0].get<int>(), e[1].get<int>());
  }

  LoadedGraph out;
  std::vector<std::pair<int, int>> normalized = raw;
  out.g = make_graph(verts, normalized);

  if (j.contains("orientation")) {
    const auto& arcs = j.at("orientation");
    if (arcs.size() != raw.size())
      throw std::invalid_argument("orientation must list one (tail,head) per edge");
    // stable-sort file entries by normalized pair: same order make_graph used
    std::vector<int> idx(raw.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      auto na = std::minmax(raw[a].first, raw[a].second);
      auto nb = std::minmax(raw[b].first, raw[b].second);
      return na < nb;
    });
    Orientation o{out.g, {}};
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      const auto& a = arcs[idx[pos]];
      if (!a.is_array() || a.size() != 2)
        throw std::invalid_argument("orientation entries must be pairs");
      int t = a[0].get<int>(), h = a[1].get<int>();
      auto [lo, hi] = out.g.edges[pos];
      if (std::minmax(t, h) != std::minmax(lo, hi))
        throw std::invalid_argument("orientation entry does not match its edge");
      o.arcs.emplace_back(t, h);
    }
    out.orientation = std::move(o);
  }
  return out;
}

inline json qpoly_to_json(const QPolynomial& p) {
  json terms = json::array();
  for (const auto& [e, cs] : p.terms) {
    json qc = json::array();
    for (const auto& c : cs) qc.push_back(int_to_json(c));
    terms.push_back(json{{"exponents", e}, {"q_coeffs", std::move(qc)}});
  }
  return json{{"k", p.k}, {"terms", std::move(terms)}};
}

inline QPolynomial qpoly_from_json(const json& j) {
  QPolynomial p;
  p.k = j.at("k").get<int>();
  for (const auto& t : j.at("terms")) {
    std::vector<int> e = t.at("exponents").get<std::vector<int>>();
    if (static_cast<int>(e.size()) != p.k)
      throw std::invalid_argument("exponent vector length must equal k");
    std::vector<Int> cs;
    for (const auto& c : t.at("q_coeffs")) cs.push_back(int_from_json(c));
    p.terms[e] = std::move(cs);
  }
  qp_normalize(p);
  return p;
}

}  // namespace csf
