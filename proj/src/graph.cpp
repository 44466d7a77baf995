#include "mincoal/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace mincoal {

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t rest = bits; rest; rest &= rest - 1) out.push_back(std::countr_zero(rest));
  return out;
}

std::string VertexSet::to_string() const {
  std::string out;
  for (std::uint64_t rest = bits; rest; rest &= rest - 1) {
    if (!out.empty()) out += ' ';
    out += std::to_string(std::countr_zero(rest));
  }
  return out;
}

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxOrder)
    throw std::invalid_argument("graph order must be in [1, " + std::to_string(kMaxOrder) +
                                "], got " + std::to_string(n));
}

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  check_order(n);
  adj_.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") with order " + std::to_string(n));
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }
}

Graph Graph::from_rows(std::vector<std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const std::uint64_t full = VertexSet::full(n).bits;
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~full) throw std::invalid_argument("adjacency row exceeds graph order");
    if ((rows[v] >> v) & 1) throw std::invalid_argument("loop at vertex " + std::to_string(v));
    for (std::uint64_t rest = rows[v]; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if (!((rows[u] >> v) & 1)) throw std::invalid_argument("adjacency rows are not symmetric");
    }
  }
  Graph g;
  g.n_ = n;
  g.adj_ = std::move(rows);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(n_));
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto row : adj_) twice += std::popcount(row);
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[v]);
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  return VertexSet(adj_[v]);
}

VertexSet Graph::closed_neighborhood(int v) const {
  check_vertex(v);
  return VertexSet(adj_[v] | std::uint64_t{1} << v);
}

int Graph::min_degree() const {
  int best = n_;
  for (auto row : adj_) best = std::min(best, std::popcount(row));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (auto row : adj_) best = std::max(best, std::popcount(row));
  return best;
}

VertexSet Graph::universal_vertices() const {
  VertexSet out;
  for (int v = 0; v < n_; ++v)
    if (std::popcount(adj_[v]) == n_ - 1) out.add(v);
  return out;
}

bool Graph::is_complete() const {
  for (auto row : adj_)
    if (std::popcount(row) != n_ - 1) return false;
  return true;
}

VertexSet Graph::component_of(int v) const {
  check_vertex(v);
  std::uint64_t comp = std::uint64_t{1} << v;
  for (;;) {
    std::uint64_t grown = comp;
    for (std::uint64_t rest = comp; rest; rest &= rest - 1) grown |= adj_[std::countr_zero(rest)];
    if (grown == comp) return VertexSet(comp);
    comp = grown;
  }
}

bool Graph::is_connected() const { return n_ >= 1 && component_of(0) == vertices(); }

bool Graph::is_tree() const { return is_connected() && edge_count() == n_ - 1; }

bool Graph::is_cycle() const {
  if (n_ < 3 || !is_connected()) return false;
  for (auto row : adj_)
    if (std::popcount(row) != 2) return false;
  return true;
}

Graph empty_graph(int n) {
  check_order(n);
  return Graph(n, {});
}

Graph complete_graph(int n) {
  check_order(n);
  std::vector<std::uint64_t> rows(n);
  const std::uint64_t full = VertexSet::full(n).bits;
  for (int v = 0; v < n; ++v) rows[v] = full & ~(std::uint64_t{1} << v);
  return Graph::from_rows(std::move(rows));
}

Graph path_graph(int n) {
  check_order(n);
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs order >= 3, got " + std::to_string(n));
  check_order(n);
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
  check_order(leaves + 1);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph complete_multipartite_graph(const std::vector<int>& part_sizes) {
  if (part_sizes.empty()) throw std::invalid_argument("need at least one part");
  int n = 0;
  for (int s : part_sizes) {
    if (s < 1) throw std::invalid_argument("part sizes must be positive");
    n += s;
  }
  check_order(n);
  std::vector<int> part_of(n);
  int v = 0;
  for (int p = 0; p < static_cast<int>(part_sizes.size()); ++p)
    for (int i = 0; i < part_sizes[p]; ++i) part_of[v++] = p;
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (part_of[a] != part_of[b]) edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph(10, edges);
}

Graph heawood_graph() {
  // 14-cycle with chords (i, i+5 mod 14) for even i (LCF notation [5,-5]^7).
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 14; ++i) edges.emplace_back(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) edges.emplace_back(i, (i + 5) % 14);
  return Graph(14, edges);
}

Graph join_graphs(const Graph& left, const Graph& right) {
  const int nl = left.order(), nr = right.order();
  check_order(nl + nr);
  const std::uint64_t right_full = VertexSet::full(nl + nr).bits & ~VertexSet::full(nl).bits;
  std::vector<std::uint64_t> rows(nl + nr);
  for (int v = 0; v < nl; ++v) rows[v] = left.rows()[v] | right_full;
  for (int v = 0; v < nr; ++v) rows[nl + v] = (right.rows()[v] << nl) | VertexSet::full(nl).bits;
  return Graph::from_rows(std::move(rows));
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
  if (!keep.subset_of(g.vertices()))
    throw std::invalid_argument("induced subgraph: set is not a subset of the vertices");
  if (keep.empty()) throw std::invalid_argument("induced subgraph: empty vertex set");
  InducedSubgraph out;
  out.original_label = keep.vertices();
  const int m = static_cast<int>(out.original_label.size());
  std::vector<std::uint64_t> rows(m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (g.has_edge(out.original_label[a], out.original_label[b])) {
        rows[a] |= std::uint64_t{1} << b;
        rows[b] |= std::uint64_t{1} << a;
      }
  out.graph = Graph::from_rows(std::move(rows));
  return out;
}

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  out += static_cast<char>(63 + n);
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out += static_cast<char>(63 + (acc << (6 - nbits)));
  return out;
}

Graph graph6_decode(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6: byte " + std::to_string(i) + " out of range");
  }
  if (text[0] == '~') throw std::invalid_argument("graph6: orders >= 63 are not supported");
  const int n = text[0] - 63;
  if (n < 1)
    throw std::invalid_argument("graph6: order 0 is not supported");
  const int npairs = n * (n - 1) / 2;
  const std::size_t want = 1 + (npairs + 5) / 6;
  if (text.size() != want)
    throw std::invalid_argument("graph6: expected " + std::to_string(want) + " bytes for order " +
                                std::to_string(n) + ", got " + std::to_string(text.size()));
  std::vector<std::uint64_t> rows(n, 0);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (((text[1 + bit / 6] - 63) >> (5 - bit % 6)) & 1) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
  const int used = npairs % 6;
  if (used != 0) {
    const int pad = (text.back() - 63) & ((1 << (6 - used)) - 1);
    if (pad != 0) throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace mincoal
