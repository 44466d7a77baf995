#include "mincoal/corpus.hpp"

#include <memory>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace mincoal {

bool GraphFilter::accepts(const Graph& g) const {
  switch (kind) {
    case Kind::All: return true;
    case Kind::Connected: return g.is_connected();
    case Kind::NoUniversal: return !g.has_universal_vertex();
    case Kind::MinDegree: return g.min_degree() >= min_degree;
  }
  return false;
}

std::string GraphFilter::name() const {
  switch (kind) {
    case Kind::All: return "all";
    case Kind::Connected: return "connected";
    case Kind::NoUniversal: return "no-universal";
    case Kind::MinDegree: return "min-degree>=" + std::to_string(min_degree);
  }
  return "?";
}

std::uint64_t labeled_graph_count(int n) {
  if (n < 1 || n > 11)
    throw std::invalid_argument("labeled graph counting supports orders 1..11");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph_from_index(int n, std::uint64_t mask) {
  if (mask >= labeled_graph_count(n))
    throw std::invalid_argument("labeled graph index out of range");
  std::vector<std::uint64_t> rows(n, 0);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
  return Graph::from_rows(std::move(rows));
}

LabeledGraphStream::LabeledGraphStream(int n, GraphFilter filter)
    : n_(n), filter_(filter), total_(0) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("exhaustive streaming supports orders 1..8");
  total_ = labeled_graph_count(n);
}

std::optional<Graph> LabeledGraphStream::next() {
  while (next_mask_ < total_) {
    Graph g = labeled_graph_from_index(n_, next_mask_++);
    if (filter_.accepts(g)) return g;
  }
  return std::nullopt;
}

Corpus labeled_corpus(int n, GraphFilter filter) {
  Corpus c;
  c.id = "labeled:n=" + std::to_string(n) +
         (filter.kind == GraphFilter::Kind::All ? "" : ":" + filter.name());
  c.raw_size = labeled_graph_count(n);
  c.at = [n, filter](std::uint64_t i) -> std::optional<Graph> {
    Graph g = labeled_graph_from_index(n, i);
    if (!filter.accepts(g)) return std::nullopt;
    return g;
  };
  return c;
}

Corpus labeled_corpus_up_to(int max_n, GraphFilter filter) {
  if (max_n < 1 || max_n > 11) throw std::invalid_argument("order out of range");
  std::vector<std::uint64_t> offsets{0};
  for (int n = 1; n <= max_n; ++n) offsets.push_back(offsets.back() + labeled_graph_count(n));
  Corpus c;
  c.id = "labeled:n<=" + std::to_string(max_n) +
         (filter.kind == GraphFilter::Kind::All ? "" : ":" + filter.name());
  c.raw_size = offsets.back();
  c.at = [offsets, filter](std::uint64_t i) -> std::optional<Graph> {
    int n = 1;
    while (i >= offsets[n]) ++n;
    Graph g = labeled_graph_from_index(n, i - offsets[n - 1]);
    if (!filter.accepts(g)) return std::nullopt;
    return g;
  };
  return c;
}

namespace {

Corpus range_corpus(std::string id, int from, int to, int least, Graph (*make)(int)) {
  if (from < least || to < from) throw std::invalid_argument("bad corpus range");
  Corpus c;
  c.id = std::move(id);
  c.raw_size = static_cast<std::uint64_t>(to - from + 1);
  c.at = [from, make](std::uint64_t i) -> std::optional<Graph> {
    return make(from + static_cast<int>(i));
  };
  return c;
}

}  // namespace

Corpus cycle_corpus(int from_n, int to_n) {
  return range_corpus("cycles:" + std::to_string(from_n) + ".." + std::to_string(to_n), from_n,
                      to_n, 3, &cycle_graph);
}

Corpus path_corpus(int from_n, int to_n) {
  return range_corpus("paths:" + std::to_string(from_n) + ".." + std::to_string(to_n), from_n,
                      to_n, 1, &path_graph);
}

Corpus star_corpus(int from_leaves, int to_leaves) {
  return range_corpus("stars:" + std::to_string(from_leaves) + ".." + std::to_string(to_leaves),
                      from_leaves, to_leaves, 1, &star_graph);
}

Corpus tree_corpus(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("tree corpus supports orders 1..8");
  auto masks = std::make_shared<std::vector<std::uint64_t>>();
  const int pairs = n * (n - 1) / 2;
  const int k = n - 1;  // a tree on n vertices has n-1 edges
  if (k == 0) {
    masks->push_back(0);
  } else {
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = (std::uint64_t{1} << pairs) - 1;
    while (s <= limit) {
      if (labeled_graph_from_index(n, s).is_tree()) masks->push_back(s);
      const std::uint64_t low = s & (~s + 1);
      const std::uint64_t ripple = s + low;
      if (ripple > limit || ripple == 0) break;
      s = ripple | (((s ^ ripple) >> 2) / low);
    }
  }
  Corpus c;
  c.id = "trees:n=" + std::to_string(n);
  c.raw_size = masks->size();
  c.at = [n, masks](std::uint64_t i) -> std::optional<Graph> {
    return labeled_graph_from_index(n, (*masks)[i]);
  };
  return c;
}

Corpus corpus_from_graphs(std::string id, std::vector<Graph> graphs) {
  auto store = std::make_shared<std::vector<Graph>>(std::move(graphs));
  Corpus c;
  c.id = std::move(id);
  c.raw_size = store->size();
  c.at = [store](std::uint64_t i) -> std::optional<Graph> { return (*store)[i]; };
  return c;
}

Corpus file_corpus(const std::string& path) {
  std::vector<Graph> graphs;
  for (auto& entry : read_graph6_file(path)) graphs.push_back(std::move(entry.graph));
  return corpus_from_graphs("file:" + path, std::move(graphs));
}

namespace {

int parse_int(const std::string& text, const std::string& spec) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number \"" + text + "\" in corpus spec \"" + spec + "\"");
  }
}

GraphFilter parse_filter(const std::string& text, const std::string& spec) {
  if (text == "connected") return GraphFilter::connected();
  if (text == "no-universal") return GraphFilter::no_universal();
  constexpr std::string_view kMinDeg = "min-degree>=";
  if (text.rfind(kMinDeg, 0) == 0)
    return GraphFilter::at_least_degree(parse_int(text.substr(kMinDeg.size()), spec));
  throw std::invalid_argument("unknown corpus filter \"" + text + "\" in \"" + spec + "\"");
}

std::pair<int, int> parse_range(const std::string& text, const std::string& spec) {
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("expected A..B in corpus spec \"" + spec + "\"");
  return {parse_int(text.substr(0, dots), spec), parse_int(text.substr(dots + 2), spec)};
}

}  // namespace

Corpus parse_corpus(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("corpus spec needs a kind prefix, e.g. labeled:n=4");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (kind == "file") return file_corpus(rest);
  if (kind == "cycles") {
    auto [a, b] = parse_range(rest, spec);
    return cycle_corpus(a, b);
  }
  if (kind == "paths") {
    auto [a, b] = parse_range(rest, spec);
    return path_corpus(a, b);
  }
  if (kind == "stars") {
    auto [a, b] = parse_range(rest, spec);
    return star_corpus(a, b);
  }
  if (kind == "trees") {
    if (rest.rfind("n=", 0) != 0)
      throw std::invalid_argument("expected trees:n=K, got \"" + spec + "\"");
    return tree_corpus(parse_int(rest.substr(2), spec));
  }
  if (kind == "labeled") {
    std::string head = rest;
    GraphFilter filter;
    if (const std::size_t extra = rest.find(':'); extra != std::string::npos) {
      head = rest.substr(0, extra);
      filter = parse_filter(rest.substr(extra + 1), spec);
    }
    if (head.rfind("n<=", 0) == 0)
      return labeled_corpus_up_to(parse_int(head.substr(3), spec), filter);
    if (head.rfind("n=", 0) == 0) return labeled_corpus(parse_int(head.substr(2), spec), filter);
    throw std::invalid_argument("expected labeled:n=K or labeled:n<=K, got \"" + spec + "\"");
  }
  throw std::invalid_argument("unknown corpus kind \"" + kind + "\" in \"" + spec + "\"");
}

Graph6Reader::Graph6Reader(const std::string& path) : path_(path), in_(path) {
  if (!in_) throw std::runtime_error("cannot open " + path);
}

std::optional<Graph6Reader::Entry> Graph6Reader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == ">>graph6<<") continue;  // decode handles an inline header
    try {
      return Entry{line_, graph6_decode(line)};
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(path_ + ":" + std::to_string(line_) + ": " + e.what());
    }
  }
  return std::nullopt;
}

std::vector<Graph6Reader::Entry> read_graph6_file(const std::string& path) {
  Graph6Reader reader(path);
  std::vector<Graph6Reader::Entry> out;
  while (auto entry = reader.next()) out.push_back(std::move(*entry));
  return out;
}

}  // namespace mincoal
