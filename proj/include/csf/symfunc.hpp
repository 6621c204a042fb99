#pragma once
// Symmetric functions with exact rational coefficients, expanded in one of
// the five classical bases: monomial (m), power-sum (p), elementary (e),
// complete homogeneous (h), Schur (s).
//
// Conversions go through the monomial basis.  For targets p, e, s the system
// [m_mu in b_lam] is triangular against the canonical (reverse-lexicographic)
// partition order, so a back-substitution peels one pivot term at a time:
//   p: pivot m_lam itself (diagonal prod r_i!), peeled from the fine end;
//   e: pivot m_{lam'} (conjugate, diagonal 1), peeled from the dominant end;
//   s: pivot m_lam (diagonal K_{lam,lam} = 1), peeled from the dominant end.
// For target h no triangular order exists ([m_mu in h_lam] counts nonnegative
// integer matrices with prescribed row/column sums, which is positive for all
// pairs), so h-conversions apply the omega involution and solve the e-system:
// omega(f) = sum c_lam e_lam  iff  f = sum c_lam h_lam.

#include <cassert>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "csf/kostka.hpp"
#include "csf/partition.hpp"
#include "csf/rational.hpp"

namespace csf {

enum class Basis : char { M = 'm', P = 'p', E = 'e', H = 'h', S = 's' };

inline char basis_char(Basis b) { return static_cast<char>(b); }

inline Basis basis_from_char(char c) {
  switch (c) {
    case 'm': return Basis::M;
    case 'p': return Basis::P;
    case 'e': return Basis::E;
    case 'h': return Basis::H;
    case 's': return Basis::S;
    default: throw std::invalid_argument(std::string("unknown basis '") + c + "'");
  }
}

struct SymFunc {
  Basis basis = Basis::M;
  int degree = 0;  // homogeneous grade; kept even when the function is zero
  std::map<Partition, Rational> coeffs;  // canonical order; zero values never stored

  friend bool operator==(const SymFunc& a, const SymFunc& b) {
    return a.basis == b.basis && a.degree == b.degree && a.coeffs == b.coeffs;
  }
  friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }
};

inline SymFunc sf_zero(Basis b, int degree) { return SymFunc{b, degree, {}}; }

inline SymFunc sf_term(Basis b, const Partition& lam, const Rational& c = 1) {
  SymFunc f{b, lam.sum(), {}};
  if (c != 0) f.coeffs[lam] = c;
  return f;
}

inline void sf_normalize(SymFunc& f) {
  for (auto it = f.coeffs.begin(); it != f.coeffs.end();)
    it = it->second == 0 ? f.coeffs.erase(it) : std::next(it);
  for (const auto& [lam, c] : f.coeffs) {
    (void)c;
    if (lam.sum() > f.degree) f.degree = lam.sum();
  }
}

inline SymFunc sf_add(const SymFunc& a, const SymFunc& b) {
  if (a.basis != b.basis) throw std::invalid_argument("sf_add: basis mismatch");
  SymFunc out = a;
  out.degree = std::max(a.degree, b.degree);
  for (const auto& [lam, c] : b.coeffs) out.coeffs[lam] += c;
  sf_normalize(out);
  return out;
}

inline SymFunc sf_scale(const SymFunc& f, const Rational& c) {
  SymFunc out{f.basis, f.degree, {}};
  if (c != 0)
    for (const auto& [lam, v] : f.coeffs) out.coeffs[lam] = v * c;
  return out;
}

inline SymFunc sf_sub(const SymFunc& a, const SymFunc& b) { return sf_add(a, sf_scale(b, -1)); }

// ---- products -------------------------------------------------------------

namespace detail {

// [m_gamma] (m_alpha * m_beta): the number of pairs of zero-padded
// rearrangements (a_i), (b_i) of alpha, beta with a_i + b_i = gamma_i.
inline long long merge_count(const Partition& alpha, const Partition& beta,
                             const Partition& gamma) {
  int r = gamma.length();
  if (alpha.length() > r || beta.length() > r) return 0;
  std::vector<int> a(alpha.parts);
  a.resize(r, 0);
  std::sort(a.begin(), a.end());
  long long cnt = 0;
  std::vector<int> b(r);
  do {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i) {
      b[i] = gamma.parts[i] - a[i];
      ok = b[i] >= 0;
    }
    if (!ok) continue;
    std::vector<int> nb;
    for (int x : b)
      if (x > 0) nb.push_back(x);
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    cnt += nb == beta.parts;
  } while (std::next_permutation(a.begin(), a.end()));
  return cnt;
}

}  // namespace detail

inline SymFunc m_multiply(const SymFunc& f, const SymFunc& g) {
  if (f.basis != Basis::M || g.basis != Basis::M)
    throw std::invalid_argument("m_multiply: both factors must be in the m basis");
  SymFunc out = sf_zero(Basis::M, f.degree + g.degree);
  for (const auto& [alpha, ca] : f.coeffs)
    for (const auto& [beta, cb] : g.coeffs) {
      Rational c = ca * cb;
      int s = alpha.sum() + beta.sum();
      int lmin = std::max(alpha.length(), beta.length());
      int lmax = alpha.length() + beta.length();
      for (const auto& gamma : partitions_of(s)) {
        if (gamma.length() < lmin || gamma.length() > lmax) continue;
        long long n = detail::merge_count(alpha, beta, gamma);
        if (n != 0) out.coeffs[gamma] += c * n;
      }
    }
  sf_normalize(out);
  return out;
}

// Power-sum products just concatenate index partitions.
inline SymFunc p_multiply(const SymFunc& f, const SymFunc& g) {
  if (f.basis != Basis::P || g.basis != Basis::P)
    throw std::invalid_argument("p_multiply: both factors must be in the p basis");
  SymFunc out = sf_zero(Basis::P, f.degree + g.degree);
  for (const auto& [alpha, ca] : f.coeffs)
    for (const auto& [beta, cb] : g.coeffs) {
      std::vector<int> parts = alpha.parts;
      parts.insert(parts.end(), beta.parts.begin(), beta.parts.end());
      out.coeffs[partition_from_multiset(std::move(parts))] += ca * cb;
    }
  sf_normalize(out);
  return out;
}

// ---- expansions into the monomial basis ------------------------------------

inline const SymFunc& basis_in_m(Basis b, const Partition& lam) {
  static std::map<std::pair<char, Partition>, SymFunc> memo;
  auto key = std::make_pair(basis_char(b), lam);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  SymFunc r;
  if (lam.empty()) {
    r = sf_term(Basis::M, Partition{});
  } else if (b == Basis::M) {
    r = sf_term(Basis::M, lam);
  } else if (b == Basis::S) {
    r = sf_zero(Basis::M, lam.sum());
    for (const auto& mu : partitions_of(lam.sum())) {
      Int k = kostka(lam, mu);
      if (k != 0) r.coeffs[mu] = Rational(k);
    }
  } else {
    // multiplicative bases: peel the last part and recurse on the prefix
    int n = lam.parts.back();
    Partition prefix(std::vector<int>(lam.parts.begin(), std::prev(lam.parts.end())));
    SymFunc gen;  // the degree-n generator in the m basis
    if (b == Basis::P) {
      gen = sf_term(Basis::M, Partition{n});
    } else if (b == Basis::E) {
      gen = sf_term(Basis::M, Partition(std::vector<int>(n, 1)));
    } else {  // Basis::H
      gen = sf_zero(Basis::M, n);
      for (const auto& mu : partitions_of(n)) gen.coeffs[mu] = 1;
    }
    r = m_multiply(basis_in_m(b, prefix), gen);
  }
  return memo.emplace(std::move(key), std::move(r)).first->second;
}

inline SymFunc to_m(const SymFunc& f) {
  if (f.basis == Basis::M) return f;
  SymFunc out = sf_zero(Basis::M, f.degree);
  for (const auto& [lam, c] : f.coeffs) {
    for (const auto& [mu, d] : basis_in_m(f.basis, lam).coeffs) out.coeffs[mu] += c * d;
  }
  sf_normalize(out);
  return out;
}

// ---- triangular back-substitutions -----------------------------------------

namespace detail {

// Subtract c * expansion from fm, erasing cancelled entries.
inline void subtract_scaled(SymFunc& fm, const Rational& c, const SymFunc& expansion) {
  for (const auto& [mu, d] : expansion.coeffs) {
    auto it = fm.coeffs.find(mu);
    if (it == fm.coeffs.end()) {
      fm.coeffs[mu] = -c * d;
    } else {
      it->second -= c * d;
      if (it->second == 0) fm.coeffs.erase(it);
    }
  }
}

inline SymFunc m_to_p(SymFunc fm) {
  SymFunc out = sf_zero(Basis::P, fm.degree);
  while (!fm.coeffs.empty()) {
    auto it = std::prev(fm.coeffs.end());  // canonically last = finest remaining
    Partition lam = it->first;
    Rational c = it->second / Rational(multiplicity_factorial(lam));
    out.coeffs[lam] = c;
    subtract_scaled(fm, c, basis_in_m(Basis::P, lam));
    // triangularity: everything left strictly precedes lam canonically
    assert(fm.coeffs.empty() || std::prev(fm.coeffs.end())->first < lam);
  }
  sf_normalize(out);
  return out;
}

inline SymFunc m_to_e(SymFunc fm) {
  SymFunc out = sf_zero(Basis::E, fm.degree);
  while (!fm.coeffs.empty()) {
    auto it = fm.coeffs.begin();  // canonically first = most dominant remaining
    Partition mu = it->first;
    Partition lam = mu.conjugate();
    const SymFunc& em = basis_in_m(Basis::E, lam);
    Rational c = it->second / em.coeffs.at(mu);
    out.coeffs[lam] += c;
    subtract_scaled(fm, c, em);
    assert(fm.coeffs.empty() || mu < fm.coeffs.begin()->first);
  }
  sf_normalize(out);
  return out;
}

inline SymFunc m_to_s(SymFunc fm) {
  SymFunc out = sf_zero(Basis::S, fm.degree);
  while (!fm.coeffs.empty()) {
    auto it = fm.coeffs.begin();
    Partition lam = it->first;
    const SymFunc& sm = basis_in_m(Basis::S, lam);
    Rational c = it->second / sm.coeffs.at(lam);  // K_{lam,lam} = 1
    out.coeffs[lam] = c;
    subtract_scaled(fm, c, sm);
    assert(fm.coeffs.empty() || lam < fm.coeffs.begin()->first);
  }
  sf_normalize(out);
  return out;
}

}  // namespace detail

inline SymFunc convert(const SymFunc& f, Basis target);

// omega: the involution with omega(p_lam) = (-1)^{|lam| - l(lam)} p_lam
// (equivalently omega(e_lam) = h_lam).
inline SymFunc omega(const SymFunc& f) {
  SymFunc fp = convert(f, Basis::P);
  SymFunc flipped = sf_zero(Basis::P, fp.degree);
  for (const auto& [lam, c] : fp.coeffs) {
    int sign = (lam.sum() - lam.length()) % 2 == 0 ? 1 : -1;
    flipped.coeffs[lam] = c * sign;
  }
  return convert(flipped, f.basis);
}

inline SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis == target) return f;
  if (target == Basis::M) return to_m(f);
  if (target == Basis::P) return detail::m_to_p(to_m(f));
  if (target == Basis::E) return detail::m_to_e(to_m(f));
  if (target == Basis::S) return detail::m_to_s(to_m(f));
  // target h: solve the e-system for omega(f) and relabel
  SymFunc ge = convert(omega(f), Basis::E);
  ge.basis = Basis::H;
  return ge;
}

// Exact value-level equality, independent of the bases the operands carry.
inline bool same_function(const SymFunc& a, const SymFunc& b) {
  SymFunc ap = convert(a, Basis::P), bp = convert(b, Basis::P);
  return ap.coeffs == bp.coeffs;
}

// ---- evaluation and sigma ---------------------------------------------------

namespace detail {

inline Rational m_eval(const Partition& lam, const std::vector<Rational>& values) {
  int k = static_cast<int>(values.size());
  if (lam.length() > k) return 0;
  std::vector<int> a(lam.parts);
  a.resize(k, 0);
  std::sort(a.begin(), a.end());
  Rational s = 0;
  do {
    Rational t = 1;
    for (int i = 0; i < k; ++i)
      if (a[i] != 0) t *= rat_pow(values[i], a[i]);
    s += t;
  } while (std::next_permutation(a.begin(), a.end()));
  return s;
}

}  // namespace detail

// Substitute x_1..x_k = values (remaining variables = 0).
inline Rational evaluate(const SymFunc& f, const std::vector<Rational>& values) {
  Rational total = 0;
  for (const auto& [lam, c] : to_m(f).coeffs) total += c * detail::m_eval(lam, values);
  return total;
}

// Sum of e-expansion coefficients: over partitions of length m if m is given,
// over all partitions otherwise.
inline Rational sigma(const SymFunc& f, std::optional<int> m = std::nullopt) {
  Rational s = 0;
  for (const auto& [lam, c] : convert(f, Basis::E).coeffs)
    if (!m || lam.length() == *m) s += c;
  return s;
}

}  // namespace csf
