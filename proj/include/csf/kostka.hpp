#pragma once
// Kostka numbers K_{lam,mu}: semistandard Young tableaux of shape lam and
// content mu, counted by direct backtracking (rows weakly increase, columns
// strictly increase), memoized per (lam, mu).

#include <map>
#include <utility>
#include <vector>

#include "csf/partition.hpp"

namespace csf {

namespace detail {

inline Int count_ssyt(const Partition& lam, const Partition& mu) {
  if (lam.sum() != mu.sum()) return 0;
  if (lam.sum() == 0) return 1;  // the empty tableau
  int rows = lam.length(), vals = mu.length();
  std::vector<int> remaining(mu.parts);
  // tab[r] holds the filled prefix of row r.
  std::vector<std::vector<int>> tab(rows);
  Int count = 0;
  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == rows) { count += 1; return; }
    int nr = r, nc = c + 1;
    if (nc == lam.parts[r]) { nr = r + 1; nc = 0; }
    int lo = c > 0 ? tab[r][c - 1] : 1;                                    // weak along the row
    for (int v = lo; v <= vals; ++v) {
      if (remaining[v - 1] == 0) continue;
      if (r > 0 && v <= tab[r - 1][c]) continue;                           // strict down the column
      tab[r].push_back(v);
      --remaining[v - 1];
      fill(nr, nc);
      ++remaining[v - 1];
      tab[r].pop_back();
    }
  };
  fill(0, 0);
  return count;
}

}  // namespace detail

inline Int kostka(const Partition& lam, const Partition& mu) {
  static std::map<std::pair<Partition, Partition>, Int> memo;
  auto key = std::make_pair(lam, mu);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Int v = detail::count_ssyt(lam, mu);
  memo.emplace(std::move(key), v);
  return v;
}

// All Kostka numbers for one degree, for callers that want the whole table.
struct KostkaTable {
  int degree = 0;
  std::map<std::pair<Partition, Partition>, Int> values;

  Int at(const Partition& lam, const Partition& mu) const {
    auto it = values.find({lam, mu});
    return it == values.end() ? Int(0) : it->second;
  }
};

inline KostkaTable build_kostka_table(int d) {
  KostkaTable t;
  t.degree = d;
  for (const auto& lam : partitions_of(d))
    for (const auto& mu : partitions_of(d)) {
      Int v = kostka(lam, mu);
      if (v != 0) t.values[{lam, mu}] = v;
    }
  return t;
}

}  // namespace csf
