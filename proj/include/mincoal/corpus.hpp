#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mincoal/graph.hpp"

namespace mincoal {

// Predicate used to narrow exhaustive sweeps.
struct GraphFilter {
  enum class Kind { All, Connected, NoUniversal, MinDegree };

  Kind kind = Kind::All;
  int min_degree = 0;

  static GraphFilter all() { return {}; }
  static GraphFilter connected() { return {Kind::Connected, 0}; }
  static GraphFilter no_universal() { return {Kind::NoUniversal, 0}; }
  static GraphFilter at_least_degree(int d) { return {Kind::MinDegree, d}; }

  bool accepts(const Graph& g) const;
  std::string name() const;
};

// Number of labeled simple graphs on n vertices (2^C(n,2)); n <= 11.
std::uint64_t labeled_graph_count(int n);

// Graph whose upper-triangle edge bits (pair (i,j), i<j, ordered by j then i,
// matching graph6 bit order) are the low bits of `mask`.
Graph labeled_graph_from_index(int n, std::uint64_t mask);

// Streams all labeled graphs on n vertices (1 <= n <= 8) passing the filter.
class LabeledGraphStream {
 public:
  explicit LabeledGraphStream(int n, GraphFilter filter = {});
  std::optional<Graph> next();

 private:
  int n_;
  GraphFilter filter_;
  std::uint64_t next_mask_ = 0;
  std::uint64_t total_;
};

// A random-access corpus for parallel sweeps: `at(i)` for i < raw_size
// returns the i-th candidate or nullopt when the filter rejects it. Results
// only depend on i, so workers can split the index range freely.
struct Corpus {
  std::string id;
  std::uint64_t raw_size = 0;
  std::function<std::optional<Graph>(std::uint64_t)> at;
};

Corpus labeled_corpus(int n, GraphFilter filter = {});
// Orders 1..max_n concatenated (smaller orders first).
Corpus labeled_corpus_up_to(int max_n, GraphFilter filter = {});
Corpus cycle_corpus(int from_n, int to_n);
Corpus path_corpus(int from_n, int to_n);
Corpus star_corpus(int from_leaves, int to_leaves);
// All labeled trees on n vertices (n <= 8), materialized.
Corpus tree_corpus(int n);
// Graphs listed in a graph6 file, one per line, materialized.
Corpus file_corpus(const std::string& path);
Corpus corpus_from_graphs(std::string id, std::vector<Graph> graphs);

// Builds a corpus from a textual description:
//   labeled:n=K[:FILTER]     all labeled graphs of order K
//   labeled:n<=K[:FILTER]    all labeled graphs of orders 1..K
//   cycles:A..B  paths:A..B  stars:A..B   (stars count leaves)
//   trees:n=K                all labeled trees of order K
//   file:PATH                graph6 lines from a file
// with FILTER one of: connected, no-universal, min-degree>=D.
Corpus parse_corpus(const std::string& spec);

// Reads a graph6 file line by line. Lines that are empty or start with ">>"
// are skipped. Decode errors become std::runtime_error naming file and line.
class Graph6Reader {
 public:
  explicit Graph6Reader(const std::string& path);

  struct Entry {
    int line = 0;  // 1-based
    Graph graph;
  };
  std::optional<Entry> next();

 private:
  std::string path_;
  std::ifstream in_;
  int line_ = 0;
};

std::vector<Graph6Reader::Entry> read_graph6_file(const std::string& path);

}  // namespace mincoal
