#pragma once
// Integer partitions and their canonical (reverse-lexicographic) order.
//
// Throughout the library, partitions of the same number are ordered
// reverse-lexicographically: (d) first, ..., (1,...,1) last.  This order
// refines dominance (if lam dominates mu then lam comes first), which is what
// makes the basis-conversion systems triangular.  operator< is that canonical
// order, so a std::map<Partition, T> iterates canonically.

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "csf/rational.hpp"

namespace csf {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, all >= 1; empty = the unit

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }
  Partition(std::initializer_list<int> p) : parts(p) { validate(); }

  void validate() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
      if (i > 0 && parts[i] > parts[i - 1])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }

  int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }

  // Multiplicities r_i = #{ j : parts[j] == i }, as (value, count) pairs, descending value.
  std::vector<std::pair<int, int>> multiplicities() const {
    std::vector<std::pair<int, int>> out;
    for (int p : parts) {
      if (!out.empty() && out.back().first == p) ++out.back().second;
      else out.emplace_back(p, 1);
    }
    return out;
  }

  Partition conjugate() const {
    std::vector<int> c;
    for (int j = 1; parts.size() > 0 && j <= parts[0]; ++j) {
      int cnt = 0;
      for (int p : parts) cnt += (p >= j);
      c.push_back(cnt);
    }
    return Partition(std::move(c));
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  // Canonical order: a < b means a precedes b reverse-lexicographically.
  friend bool operator<(const Partition& a, const Partition& b) { return b.parts < a.parts; }
};

// Sort a multiset of positive values into a Partition.
inline Partition partition_from_multiset(std::vector<int> vals) {
  std::sort(vals.begin(), vals.end(), std::greater<int>());
  return Partition(std::move(vals));
}

// prod_i r_i(lam)!  — the stabilizer size of lam's parts under permutation.
inline Int multiplicity_factorial(const Partition& lam) {
  Int r = 1;
  for (auto [v, c] : lam.multiplicities()) { (void)v; r *= factorial(c); }
  return r;
}

// All partitions of d in canonical order: (d) first, 1^d last.  Memoized.
inline const std::vector<Partition>& partitions_of(int d) {
  if (d < 0) throw std::invalid_argument("partitions_of: negative d");
  static std::vector<std::vector<Partition>> cache;
  if (d < static_cast<int>(cache.size())) return cache[d];
  for (int k = static_cast<int>(cache.size()); k <= d; ++k) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
      if (rem == 0) { out.push_back(Partition(cur)); return; }
      for (int p = std::min(maxp, rem); p >= 1; --p) {
        cur.push_back(p);
        rec(rem - p, p);
        cur.pop_back();
      }
    };
    rec(k, k);
    cache.push_back(std::move(out));
  }
  return cache[d];
}

// Dominance order on partitions of equal sum: lam dominates mu iff every
// prefix sum of lam is >= the corresponding prefix sum of mu.
inline bool dominates(const Partition& lam, const Partition& mu) {
  if (lam.sum() != mu.sum()) throw std::invalid_argument("dominates: partition sizes differ");
  int a = 0, b = 0;
  std::size_t n = std::max(lam.parts.size(), mu.parts.size());
  for (std::size_t i = 0; i < n; ++i) {
    a += i < lam.parts.size() ? lam.parts[i] : 0;
    b += i < mu.parts.size() ? mu.parts[i] : 0;
    if (a < b) return false;
  }
  return true;
}

// mu refines lam iff mu's parts can be grouped into blocks summing to lam's
// parts.  Backtracking with symmetry pruning on equal residual capacities.
inline bool is_refinement(const Partition& mu, const Partition& lam) {
  if (mu.sum() != lam.sum()) throw std::invalid_argument("is_refinement: partition sizes differ");
  std::vector<int> cap(lam.parts);
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == mu.parts.size()) return true;  // caps sum to 0 and are >= 0, hence all zero
    int p = mu.parts[i];
    std::vector<int> tried;
    for (std::size_t b = 0; b < cap.size(); ++b) {
      if (cap[b] < p) continue;
      if (std::find(tried.begin(), tried.end(), cap[b]) != tried.end()) continue;
      tried.push_back(cap[b]);
      cap[b] -= p;
      bool ok = place(i + 1);
      cap[b] += p;
      if (ok) return true;
    }
    return false;
  };
  return place(0);
}

}  // namespace csf
