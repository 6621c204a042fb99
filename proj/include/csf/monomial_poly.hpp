#pragma once
// Dense polynomials in x_1..x_k with integer coefficients, used wherever a
// symmetric function has to be compared against a direct enumeration
// (truncation to k variables determines a degree-d symmetric function once
// k >= d).

#include <map>
#include <stdexcept>
#include <vector>

#include "csf/symfunc.hpp"

namespace csf {

struct MonomialPoly {
  int k = 0;
  std::map<std::vector<int>, Int> terms;  // exponent vector (length k) -> coefficient

  friend bool operator==(const MonomialPoly& a, const MonomialPoly& b) {
    return a.k == b.k && a.terms == b.terms;
  }
  friend bool operator!=(const MonomialPoly& a, const MonomialPoly& b) { return !(a == b); }
};

inline void mp_add(MonomialPoly& p, const std::vector<int>& exps, const Int& c) {
  auto it = p.terms.find(exps);
  if (it == p.terms.end()) {
    if (c != 0) p.terms[exps] = c;
  } else {
    it->second += c;
    if (it->second == 0) p.terms.erase(it);
  }
}

// Substitute x_{k+1} = x_{k+2} = ... = 0 into scale * f.  Coefficients must
// come out integral (they always do for coloring generating functions).
inline MonomialPoly truncate_to_vars(const SymFunc& f, int k, const Rational& scale = 1) {
  if (k < 0) throw std::invalid_argument("truncate_to_vars: negative k");
  MonomialPoly out;
  out.k = k;
  for (const auto& [lam, c] : to_m(f).coeffs) {
    if (lam.length() > k) continue;
    Int ic = to_int(c * scale);
    if (ic == 0) continue;
    std::vector<int> a(lam.parts);
    a.resize(k, 0);
    std::sort(a.begin(), a.end());
    do mp_add(out, a, ic);
    while (std::next_permutation(a.begin(), a.end()));
  }
  return out;
}

}  // namespace csf
