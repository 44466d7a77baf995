#include "mincoal/domination.hpp"

#include <stdexcept>

namespace mincoal {

namespace {

void check_subset(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices()))
    throw std::invalid_argument("vertex set is not a subset of the graph's vertices");
}

}  // namespace

VertexSet dominated_vertices(const Graph& g, VertexSet s) {
  check_subset(g, s);
  std::uint64_t covered = s.bits;
  for (std::uint64_t rest = s.bits; rest; rest &= rest - 1)
    covered |= g.rows()[std::countr_zero(rest)];
  return VertexSet(covered);
}

bool is_dominating_set(const Graph& g, VertexSet s) {
  return dominated_vertices(g, s) == g.vertices();
}

VertexSet undominated_vertices(const Graph& g, VertexSet s) {
  return g.vertices() - dominated_vertices(g, s);
}

VertexSet minimum_dominating_set(const Graph& g) {
  const int n = g.order();
  // Subsets in increasing size, then increasing bitmask value within a size,
  // via colex-style enumeration of k-subsets (Gosper's hack).
  for (int k = 1; k <= n; ++k) {
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = VertexSet::full(n).bits;
    while (s <= limit) {
      if (is_dominating_set(g, VertexSet(s))) return VertexSet(s);
      // next k-subset
      const std::uint64_t low = s & -s;
      const std::uint64_t ripple = s + low;
      if (ripple > limit || ripple == 0) break;
      s = ripple | (((s ^ ripple) >> 2) / low);
    }
  }
  // Unreachable: the full vertex set always dominates (n >= 1).
  throw std::logic_error("no dominating set found");
}

int domination_number(const Graph& g) { return minimum_dominating_set(g).size(); }

}  // namespace mincoal
