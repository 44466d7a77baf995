#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mincoal {

// Everything here works on graphs of order at most kMaxOrder so that a vertex
// subset always fits in one machine word and a graph6 order fits in one byte.
inline constexpr int kMaxOrder = 62;

// A subset of {0, ..., n-1}, one bit per vertex.
struct VertexSet {
  std::uint64_t bits = 0;

  VertexSet() = default;
  explicit constexpr VertexSet(std::uint64_t mask) : bits(mask) {}

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  bool contains(int v) const { return (bits >> v) & 1; }
  void add(int v) { bits |= std::uint64_t{1} << v; }
  void remove(int v) { bits &= ~(std::uint64_t{1} << v); }
  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  // Smallest vertex in the set; the set must be nonempty.
  int lowest() const { return std::countr_zero(bits); }
  bool subset_of(VertexSet other) const { return (bits & ~other.bits) == 0; }
  bool intersects(VertexSet other) const { return (bits & other.bits) != 0; }

  std::vector<int> vertices() const;
  // Space-separated increasing vertex list, e.g. "0 1 4".
  std::string to_string() const;

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
  VertexSet& operator|=(VertexSet o) {
    bits |= o.bits;
    return *this;
  }
  bool operator==(const VertexSet&) const = default;
};

// Simple undirected graph (no loops, no multi-edges) on vertices 0..n-1,
// stored as one adjacency bitmask per vertex.
class Graph {
 public:
  Graph() = default;
  // Throws std::invalid_argument on out-of-range order, out-of-range
  // endpoints, or loops. Duplicate edges are harmless.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  // Builds from raw adjacency rows, validating symmetry and irreflexivity.
  static Graph from_rows(std::vector<std::uint64_t> rows);

  int order() const { return n_; }
  int edge_count() const;
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  VertexSet neighbors(int v) const;
  VertexSet closed_neighborhood(int v) const;
  VertexSet vertices() const { return VertexSet::full(n_); }

  int min_degree() const;
  int max_degree() const;
  VertexSet universal_vertices() const;
  bool has_universal_vertex() const { return !universal_vertices().empty(); }
  bool is_complete() const;
  bool is_connected() const;
  bool is_tree() const;
  bool is_cycle() const;
  // Component containing v, as a vertex set.
  VertexSet component_of(int v) const;

  const std::vector<std::uint64_t>& rows() const { return adj_; }
  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

// Generators. All throw std::invalid_argument on out-of-range orders.
Graph empty_graph(int n);                  // edgeless graph on n >= 1 vertices
Graph complete_graph(int n);               // K_n, n >= 1
Graph path_graph(int n);                   // P_n, n >= 1
Graph cycle_graph(int n);                  // C_n, n >= 3
Graph star_graph(int leaves);              // K_{1,leaves}: center 0, leaves >= 1
Graph complete_multipartite_graph(const std::vector<int>& part_sizes);
Graph petersen_graph();                    // outer 5-cycle 0..4, inner pentagram 5..9, spokes i-(i+5)
Graph heawood_graph();                     // LCF [5,-5]^7: 14-cycle plus chords (i, i+5 mod 14) for even i

// Join F + H: disjoint union plus all edges between the two sides.
// Vertices of `left` keep their labels; vertices of `right` are shifted up.
Graph join_graphs(const Graph& left, const Graph& right);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> original_label;  // original_label[new vertex] = old vertex
};
// Subgraph induced by `keep` (must be a nonempty subset of the vertices),
// relabeled to 0..|keep|-1 preserving order.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep);

// graph6 codec for orders 1..62 (single order byte). Decode accepts an
// optional ">>graph6<<" prefix and validates order, length and padding;
// errors are std::invalid_argument with a byte position where useful.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

}  // namespace mincoal
