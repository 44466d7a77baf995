#pragma once

#include "mincoal/graph.hpp"

namespace mincoal {

// Union of closed neighborhoods of the members of s.
VertexSet dominated_vertices(const Graph& g, VertexSet s);

// True iff every vertex of g is in the closed neighborhood of some member
// of s. The empty set dominates nothing, so it is never dominating for
// n >= 1. s must be a subset of the vertices of g.
bool is_dominating_set(const Graph& g, VertexSet s);

// Vertices not dominated by s (empty iff s dominates).
VertexSet undominated_vertices(const Graph& g, VertexSet s);

// Size of a smallest dominating set. g must have order >= 1.
int domination_number(const Graph& g);

// Lexicographically least minimum dominating set (ordered by bitmask value
// among smallest-size sets).
VertexSet minimum_dominating_set(const Graph& g);

}  // namespace mincoal
