#pragma once
// Chromatic symmetric function of a vertex-weighted multigraph, computed by
// three independent routes:
//
//   stable   - sum over stable partitions: X = sum_lam |St_lam| prod_i r_i! m_lam
//   subsets  - edge-subset expansion:      X = sum_{S subseteq E} (-1)^{|S|} p_{lam(S)}
//   delcon   - deletion-contraction recursion with an isomorphism-keyed memo:
//              X_G = X_{G\e} - X_{G/e}, pivoting on the first edge in canonical
//              order; edgeless graphs give p_{(weights)}, loops give zero.
//
// Every engine returns the power-sum expansion; X is homogeneous of degree
// d = total weight, and a loop forces X = 0 (kept as a zero of degree d).

#include <map>
#include <string>
#include <vector>

#include "csf/graph.hpp"
#include "csf/monomial_poly.hpp"
#include "csf/orientation.hpp"
#include "csf/symfunc.hpp"

namespace csf {

enum class Engine { Stable, Subsets, DelCon };

inline const char* engine_name(Engine e) {
  switch (e) {
    case Engine::Stable: return "stable";
    case Engine::Subsets: return "subsets";
    default: return "delcon";
  }
}

inline SymFunc csf_stable(const VertexWeightedGraph& g) {
  int d = g.total_weight();
  SymFunc m = sf_zero(Basis::M, d);
  for (const auto& lam : partitions_of(d)) {
    Int cnt = stable_partitions(g, lam);
    if (cnt != 0) m.coeffs[lam] = Rational(cnt * multiplicity_factorial(lam));
  }
  SymFunc p = convert(m, Basis::P);
  p.degree = d;
  return p;
}

inline SymFunc csf_subsets(const VertexWeightedGraph& g) {
  if (g.edges.size() > 24)
    throw std::invalid_argument("csf_subsets: more than 24 edges");
  int d = g.total_weight();
  SymFunc p = sf_zero(Basis::P, d);
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << g.edges.size()); ++mask) {
    int sign = __builtin_popcount(mask) % 2 == 0 ? 1 : -1;
    p.coeffs[lambda_of_subset_mask(g, mask)] += sign;
  }
  sf_normalize(p);
  p.degree = d;
  return p;
}

namespace detail {

inline std::map<std::string, SymFunc>& delcon_memo() {
  static std::map<std::string, SymFunc> memo;
  return memo;
}

}  // namespace detail

inline SymFunc csf_delcon(const VertexWeightedGraph& g) {
  int d = g.total_weight();
  if (g.has_loop()) return sf_zero(Basis::P, d);
  if (g.edges.empty()) {
    std::vector<int> ws(g.weights);
    return sf_term(Basis::P, partition_from_multiset(std::move(ws)));
  }
  std::optional<std::string> key = canonical_key(g);
  if (key) {
    auto it = detail::delcon_memo().find(*key);
    if (it != detail::delcon_memo().end()) return it->second;
  }
  // pivot on the lexicographically least (min,max,occurrence) edge
  SymFunc x = sf_sub(csf_delcon(delete_edge_at(g, 0)), csf_delcon(contract_edge_at(g, 0)));
  x.degree = d;
  if (key) detail::delcon_memo().emplace(std::move(*key), x);  // insert-once
  return x;
}

// ---- results with provenance ------------------------------------------------

struct CsfResult {
  SymFunc value;  // power-sum expansion
  Engine provenance = Engine::DelCon;
  std::string fingerprint;  // stable hash of the canonical serialization
};

// Canonical serialization of the power-sum form: deterministic text from the
// canonically ordered coefficient map.
inline std::string canonical_p_serialization(const SymFunc& f) {
  SymFunc p = convert(f, Basis::P);
  std::string s = "p:" + std::to_string(p.degree) + ";";
  for (const auto& [lam, c] : p.coeffs) {
    for (int v : lam.parts) s += std::to_string(v) + ",";
    s += "=" + Rational(c).str() + ";";
  }
  return s;
}

inline std::string csf_fingerprint(const SymFunc& f) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(canonical_p_serialization(f))));
  return std::string(buf);
}

inline CsfResult csf(const VertexWeightedGraph& g, Engine engine) {
  SymFunc v;
  switch (engine) {
    case Engine::Stable: v = csf_stable(g); break;
    case Engine::Subsets: v = csf_subsets(g); break;
    case Engine::DelCon: v = csf_delcon(g); break;
  }
  return CsfResult{v, engine, csf_fingerprint(v)};
}

// All three engines; exact agreement is the caller's to assert (the results
// carry fingerprints precisely so disagreement can be reported with a witness).
inline std::vector<CsfResult> csf_all_engines(const VertexWeightedGraph& g) {
  return {csf(g, Engine::Stable), csf(g, Engine::Subsets), csf(g, Engine::DelCon)};
}

inline bool engines_agree(const std::vector<CsfResult>& rs) {
  for (std::size_t i = 1; i < rs.size(); ++i)
    if (rs[i].value != rs[0].value) return false;
  return true;
}

// Check the relation from the uncontraction side: given G and an edge e,
// X_{G/e} must equal X_{G\e} - X_G.
inline bool csf_uncontract_check(const VertexWeightedGraph& g, int k) {
  SymFunc lhs = csf_delcon(contract_edge_at(g, k));
  SymFunc rhs = sf_sub(csf_delcon(delete_edge_at(g, k)), csf_delcon(g));
  return lhs.coeffs == rhs.coeffs;
}

// ---- weak (orientation) expansion --------------------------------------------

// Sum over pairs (acyclic orientation, weakly proper coloring with k colors):
// a coloring is weakly proper for an orientation when kappa(tail) <= kappa(head)
// along every arc.  Monomials record color-class weights.
inline MonomialPoly weak_csf_truncated(const VertexWeightedGraph& g, int k) {
  MonomialPoly out;
  out.k = k;
  int n = g.n();
  for (const Orientation& o : acyclic_orientations(g)) {
    // constraints against already-colored vertices, per vertex index
    std::vector<std::vector<std::pair<int, bool>>> pre(n);  // (earlier idx, earlier must be <=)
    for (auto [t, h] : o.arcs) {
      int ti = g.index_of(t), hi = g.index_of(h);
      if (ti < hi) pre[hi].push_back({ti, true});    // color[ti] <= color[hi]
      else pre[ti].push_back({hi, false});           // color[hi] >= color[ti]
    }
    std::vector<int> color(n, 0);
    std::vector<int> exps(k, 0);
    std::function<void(int)> rec = [&](int v) {
      if (v == n) { mp_add(out, exps, 1); return; }
      for (int c = 1; c <= k; ++c) {
        bool ok = true;
        for (auto [u, leq] : pre[v])
          if (leq ? color[u] > c : color[u] < c) { ok = false; break; }
        if (!ok) continue;
        color[v] = c;
        exps[c - 1] += g.weights[v];
        rec(v + 1);
        exps[c - 1] -= g.weights[v];
      }
    };
    rec(0);
  }
  return out;
}

// ---- chromatic polynomial ------------------------------------------------------

// Number of proper colorings with k colors; weights are irrelevant, and k may
// be any integer (the polynomial is interpolated exactly from 0..n).
inline Int chromatic_polynomial(const VertexWeightedGraph& g, int k) {
  VertexWeightedGraph unit = with_unit_weights(g);
  SymFunc x = csf_delcon(unit);
  int n = g.n();
  std::vector<Rational> nodes(n + 1);
  for (int j = 0; j <= n; ++j)
    nodes[j] = evaluate(x, std::vector<Rational>(j, Rational(1)));
  if (k >= 0 && k <= n) return to_int(nodes[k]);
  Rational val = 0;
  for (int j = 0; j <= n; ++j) {
    Rational term = nodes[j];
    for (int i = 0; i <= n; ++i)
      if (i != j) term *= Rational(k - i) / Rational(j - i);
    val += term;
  }
  return to_int(val);
}

// Number of acyclic orientations, via chi at -1.
inline Int acyclic_orientation_count(const VertexWeightedGraph& g) {
  Int v = chromatic_polynomial(g, -1);
  return g.n() % 2 == 0 ? v : -v;
}

}  // namespace csf
