#pragma once

// Deliberately naive reference implementations used only to cross-check the
// library. They share nothing with the production code paths except the
// Graph container itself: plain vectors, recursion and linear scans instead
// of bitmasks and growth strings.

#include <algorithm>
#include <optional>
#include <vector>

#include "mincoal/graph.hpp"

namespace oracle {

using Blocks = std::vector<std::vector<int>>;

inline bool dominates(const mincoal::Graph& g, const std::vector<int>& s) {
  if (s.empty()) return false;
  std::vector<char> hit(g.order(), 0);
  for (int v : s) {
    hit[v] = 1;
    for (int u = 0; u < g.order(); ++u)
      if (g.has_edge(u, v)) hit[u] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

inline int gamma(const mincoal::Graph& g) {
  const int n = g.order();
  int best = n;
  for (unsigned long long mask = 1; mask < (1ull << n); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (mask & (1ull << v)) s.push_back(v);
    if (static_cast<int>(s.size()) < best && dominates(g, s)) best = static_cast<int>(s.size());
  }
  return best;
}

inline void partitions_rec(int n, int next, Blocks& cur, std::vector<Blocks>& out) {
  if (next == n) {
    out.push_back(cur);
    return;
  }
  // Index loop: recursion appends to (and later shrinks) `cur`, which would
  // invalidate references held by a range-for.
  const std::size_t existing = cur.size();
  for (std::size_t bi = 0; bi < existing; ++bi) {
    cur[bi].push_back(next);
    partitions_rec(n, next + 1, cur, out);
    cur[bi].pop_back();
  }
  cur.push_back({next});
  partitions_rec(n, next + 1, cur, out);
  cur.pop_back();
}

inline std::vector<Blocks> all_partitions(int n) {
  std::vector<Blocks> out;
  Blocks cur;
  partitions_rec(n, 0, cur, out);
  return out;
}

inline bool is_c_partition(const mincoal::Graph& g, const Blocks& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (dominates(g, p[i])) {
      if (p[i].size() != 1) return false;
      continue;
    }
    bool justified = false;
    for (std::size_t j = 0; j < p.size() && !justified; ++j) {
      if (j == i || dominates(g, p[j])) continue;
      std::vector<int> both = p[i];
      both.insert(both.end(), p[j].begin(), p[j].end());
      justified = dominates(g, both);
    }
    if (!justified) return false;
  }
  return true;
}

inline std::optional<int> cmin(const mincoal::Graph& g) {
  std::optional<int> best;
  for (const Blocks& p : all_partitions(g.order()))
    if (is_c_partition(g, p) && (!best || static_cast<int>(p.size()) < *best))
      best = static_cast<int>(p.size());
  return best;
}

inline std::optional<int> cnum(const mincoal::Graph& g) {
  std::optional<int> best;
  for (const Blocks& p : all_partitions(g.order()))
    if (is_c_partition(g, p) && (!best || static_cast<int>(p.size()) > *best))
      best = static_cast<int>(p.size());
  return best;
}

inline mincoal::Graph remove_vertices(const mincoal::Graph& g, std::vector<int> gone) {
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (std::find(gone.begin(), gone.end(), v) == gone.end()) keep.push_back(v);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b)
      if (g.has_edge(keep[a], keep[b]))
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return mincoal::Graph(static_cast<int>(keep.size()), edges);
}

// Definition-chasing family-M membership: peel a universal vertex or a pair
// of nonadjacent vertices adjacent to everything else, trying every choice.
inline bool in_family_m(const mincoal::Graph& g) {
  const int n = g.order();
  if (n <= 2) return true;  // K_1, K_2 and the 2-vertex empty graph are all bases
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1 && in_family_m(remove_vertices(g, {v}))) return true;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w)
      if (!g.has_edge(u, w) && g.degree(u) == n - 2 && g.degree(w) == n - 2 &&
          in_family_m(remove_vertices(g, {u, w})))
        return true;
  return false;
}

}  // namespace oracle
