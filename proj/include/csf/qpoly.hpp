#pragma once
// q-refined chromatic functions for an oriented weighted multigraph: each
// proper coloring contributes its weight monomial times q^{ascents}, where an
// ascent is an arc occurrence (t, h) with kappa(t) < kappa(h).  Loops admit no
// proper coloring, so a looped graph's polynomial is zero (in particular a
// contracted parallel edge kills its term, and contributes no ascents).

#include <map>
#include <vector>

#include "csf/monomial_poly.hpp"
#include "csf/orientation.hpp"

namespace csf {

struct QPolynomial {
  int k = 0;                                        // number of x variables
  std::map<std::vector<int>, std::vector<Int>> terms;  // exponents -> q coeffs, ascending degree

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
    return a.k == b.k && a.terms == b.terms;
  }
  friend bool operator!=(const QPolynomial& a, const QPolynomial& b) { return !(a == b); }
};

inline void qp_normalize(QPolynomial& p) {
  for (auto it = p.terms.begin(); it != p.terms.end();) {
    auto& cs = it->second;
    while (!cs.empty() && cs.back() == 0) cs.pop_back();
    it = cs.empty() ? p.terms.erase(it) : std::next(it);
  }
}

inline void qp_add_term(QPolynomial& p, const std::vector<int>& exps, int qdeg, const Int& c) {
  auto& cs = p.terms[exps];
  if (static_cast<int>(cs.size()) <= qdeg) cs.resize(qdeg + 1, 0);
  cs[qdeg] += c;
}

inline QPolynomial qp_add(const QPolynomial& a, const QPolynomial& b) {
  if (a.k != b.k) throw std::invalid_argument("qp_add: variable counts differ");
  QPolynomial out = a;
  for (const auto& [e, cs] : b.terms)
    for (std::size_t i = 0; i < cs.size(); ++i) qp_add_term(out, e, static_cast<int>(i), cs[i]);
  qp_normalize(out);
  return out;
}

inline QPolynomial qp_scale(const QPolynomial& a, const Int& c) {
  QPolynomial out = a;
  for (auto& [e, cs] : out.terms) {
    (void)e;
    for (auto& x : cs) x *= c;
  }
  qp_normalize(out);
  return out;
}

inline QPolynomial qp_sub(const QPolynomial& a, const QPolynomial& b) {
  return qp_add(a, qp_scale(b, -1));
}

// Multiply by (1 + q).
inline QPolynomial qp_one_plus_q(const QPolynomial& a) {
  QPolynomial out = a;
  for (const auto& [e, cs] : a.terms)
    for (std::size_t i = 0; i < cs.size(); ++i) qp_add_term(out, e, static_cast<int>(i) + 1, cs[i]);
  qp_normalize(out);
  return out;
}

// Substitute q = 1: collapses to the plain coloring generating polynomial.
inline MonomialPoly qp_at_q_one(const QPolynomial& a) {
  MonomialPoly out;
  out.k = a.k;
  for (const auto& [e, cs] : a.terms) {
    Int s = 0;
    for (const auto& c : cs) s += c;
    mp_add(out, e, s);
  }
  return out;
}

// The oriented, q-counting expansion over proper colorings with k colors.
inline QPolynomial quasi_csf(const Orientation& o, int k) {
  QPolynomial out;
  out.k = k;
  const VertexWeightedGraph& g = o.g;
  if (g.has_loop()) return out;
  int n = g.n();
  // per vertex: constraints/ascent relations against earlier-indexed vertices
  struct Rel { int u; bool i_am_tail; };
  std::vector<std::vector<Rel>> pre(n);
  for (auto [t, h] : o.arcs) {
    int ti = g.index_of(t), hi = g.index_of(h);
    if (ti < hi) pre[hi].push_back({ti, false});
    else pre[ti].push_back({hi, true});
  }
  std::vector<int> color(n, 0);
  std::vector<int> exps(k, 0);
  std::function<void(int, int)> rec = [&](int v, int asc) {
    if (v == n) { qp_add_term(out, exps, asc, 1); return; }
    for (int c = 1; c <= k; ++c) {
      bool ok = true;
      int add = 0;
      for (const Rel& r : pre[v]) {
        if (color[r.u] == c) { ok = false; break; }
        // ascent per occurrence: tail color < head color
        if (r.i_am_tail ? c < color[r.u] : color[r.u] < c) ++add;
      }
      if (!ok) continue;
      color[v] = c;
      exps[c - 1] += g.weights[v];
      rec(v + 1, asc + add);
      exps[c - 1] -= g.weights[v];
    }
    color[v] = 0;
  };
  rec(0, 0);
  qp_normalize(out);
  return out;
}

// The flip relation at edge k:
//   X_{G,gamma} + X_{G,gamma flipped at e} = (1+q) (X_{G\e} - X_{G/e})
// with the deleted and contracted sides carrying the induced orientations.
struct FlipCheck {
  bool pass = false;
  QPolynomial lhs, rhs;
};

inline FlipCheck verify_flip_relation(const Orientation& o, int edge, int k) {
  FlipCheck r;
  r.lhs = qp_add(quasi_csf(o, k), quasi_csf(flip_orientation(o, edge), k));
  r.rhs = qp_one_plus_q(
      qp_sub(quasi_csf(delete_edge_oriented(o, edge), k), quasi_csf(contract_orientation(o, edge), k)));
  r.pass = r.lhs == r.rhs;
  return r;
}

}  // namespace csf
