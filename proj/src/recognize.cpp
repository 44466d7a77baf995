#include "mincoal/recognize.hpp"

#include <algorithm>
#include <stdexcept>

#include "mincoal/domination.hpp"

namespace mincoal {

namespace {

struct LabeledStrip {
  Graph residual;
  std::vector<int> original_label;    // residual vertex -> vertex of the input graph
  std::vector<int> stripped;          // removed vertices, in removal order (input labels)
};

LabeledStrip strip_universal_labeled(const Graph& g) {
  LabeledStrip out{g, {}, {}};
  out.original_label.resize(g.order());
  for (int v = 0; v < g.order(); ++v) out.original_label[v] = v;
  for (;;) {
    const VertexSet universal = out.residual.universal_vertices();
    if (universal.empty()) return out;
    if (out.residual.order() == 1)
      throw std::invalid_argument("cannot strip a complete graph down to nothing");
    const int v = universal.lowest();
    out.stripped.push_back(out.original_label[v]);
    InducedSubgraph sub =
        induced_subgraph(out.residual, out.residual.vertices() - VertexSet::single(v));
    std::vector<int> relabeled(sub.graph.order());
    for (int i = 0; i < sub.graph.order(); ++i)
      relabeled[i] = out.original_label[sub.original_label[i]];
    out.residual = std::move(sub.graph);
    out.original_label = std::move(relabeled);
  }
}

void require_no_universal(const Graph& g, const char* what) {
  if (g.has_universal_vertex())
    throw std::invalid_argument(std::string(what) + " requires a graph with no universal vertex");
}

// Builds the certificate for a partition that a structural argument
// guarantees to be a c-partition; a failure here means that argument or its
// implementation is broken, not bad input.
CPartitionCertificate certified(const Graph& g, const SetPartition& p, const char* context) {
  auto cert = is_c_partition(g, p);
  if (!cert) throw std::logic_error(std::string("internal: expected a c-partition (") + context + ")");
  return *cert;
}

}  // namespace

ReductionTrace strip_universal(const Graph& g) {
  if (g.is_complete())
    throw std::invalid_argument("stripping a complete graph would leave no vertices");
  LabeledStrip s = strip_universal_labeled(g);
  return {static_cast<int>(s.stripped.size()), std::move(s.residual)};
}

std::optional<int> test_cmin_eq_2(const Graph& g) {
  require_no_universal(g, "the 2-block test");
  for (int v = 0; v < g.order(); ++v)
    if (!is_dominating_set(g, g.closed_neighborhood(v))) return v;
  return std::nullopt;
}

bool test_cmin_ge_3(const Graph& g) { return !test_cmin_eq_2(g).has_value(); }

std::optional<NeighborhoodSplit> find_non_dominating_split(const Graph& g, int degree_cap) {
  require_no_universal(g, "the neighborhood-split search");
  for (int v = 0; v < g.order(); ++v) {
    const int deg = g.degree(v);
    if (deg > degree_cap)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(deg) + ", above the split-search cap of " +
                                  std::to_string(degree_cap));
    const VertexSet closed = g.closed_neighborhood(v);
    if (closed.size() < 2) continue;
    const int low = closed.lowest();
    const std::vector<int> rest = (closed - VertexSet::single(low)).vertices();
    const int m = static_cast<int>(rest.size());
    // Part A always holds the lowest member, so each unordered split shows
    // up once; masks ascend, which fixes the returned witness.
    for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << m); ++mask) {
      VertexSet a = VertexSet::single(low);
      VertexSet b;
      for (int t = 0; t < m; ++t)
        ((mask >> t) & 1 ? a : b).add(rest[t]);
      if (!is_dominating_set(g, a) && !is_dominating_set(g, b)) return NeighborhoodSplit{v, a, b};
    }
  }
  return std::nullopt;
}

bool test_cmin_ge_4(const Graph& g, int degree_cap) {
  if (!test_cmin_ge_3(g)) return false;
  return !find_non_dominating_split(g, degree_cap).has_value();
}

bool property_star(const Graph& g) {
  const VertexSet universal = g.universal_vertices();
  const std::vector<int> candidates = (g.vertices() - universal).vertices();
  for (std::size_t a = 0; a < candidates.size(); ++a)
    for (std::size_t b = a + 1; b < candidates.size(); ++b)
      if (!is_dominating_set(g, VertexSet::of({candidates[a], candidates[b]}))) return false;
  return true;
}

int MDerivation::order() const {
  int n = base == Base::K1 ? 1 : 2;
  for (Step s : steps) n += s == Step::AddK1 ? 1 : 2;
  return n;
}

Graph MDerivation::replay() const {
  Graph acc;
  switch (base) {
    case Base::K1: acc = complete_graph(1); break;
    case Base::K2: acc = complete_graph(2); break;
    case Base::K2bar: acc = empty_graph(2); break;
  }
  for (Step s : steps)
    acc = join_graphs(s == Step::AddK1 ? complete_graph(1) : empty_graph(2), acc);
  return acc;
}

nlohmann::json MDerivation::to_json() const {
  const char* base_name = base == Base::K1 ? "K1" : base == Base::K2 ? "K2" : "K2bar";
  nlohmann::json steps_json = nlohmann::json::array();
  for (Step s : steps) steps_json.push_back(s == Step::AddK1 ? "join-K1" : "join-K2bar");
  return {{"base", base_name}, {"steps", steps_json}, {"order", order()}};
}

std::optional<MDerivation> is_family_M(const Graph& g) {
  const int n = g.order();
  if (n == 1) return MDerivation{MDerivation::Base::K1, {}};
  if (n == 2)
    return MDerivation{g.has_edge(0, 1) ? MDerivation::Base::K2 : MDerivation::Base::K2bar, {}};
  // The family is exactly the closure of {K1, K2, K2bar} under joining K1 or
  // K2bar, joins being associative and commutative up to isomorphism. In the
  // complement a join turns into a disjoint union, so membership means every
  // component of the complement graph has at most 2 vertices.
  std::vector<std::uint64_t> co_rows(n);
  const std::uint64_t full = g.vertices().bits;
  for (int v = 0; v < n; ++v)
    co_rows[v] = full & ~g.rows()[v] & ~(std::uint64_t{1} << v);
  const Graph complement = Graph::from_rows(std::move(co_rows));
  std::vector<VertexSet> factors;  // complement components, smallest vertex first
  VertexSet left = complement.vertices();
  while (!left.empty()) {
    const VertexSet comp = complement.component_of(left.lowest());
    if (comp.size() > 2) return std::nullopt;
    factors.push_back(comp);
    left = left - comp;
  }
  // Innermost factor becomes the base; the others are prepended outward.
  MDerivation d;
  d.base = factors.back().size() == 1 ? MDerivation::Base::K1 : MDerivation::Base::K2bar;
  for (int i = static_cast<int>(factors.size()) - 2; i >= 0; --i)
    d.steps.push_back(factors[i].size() == 1 ? MDerivation::Step::AddK1
                                             : MDerivation::Step::AddK2bar);
  return d;
}

nlohmann::json FamilyFWitness::to_json() const {
  return {{"apex", apex}, {"hubs", {hub_a, hub_b}}, {"core", core.to_string()}};
}

std::optional<FamilyFWitness> is_family_F(const Graph& g) {
  const int n = g.order();
  if (n < 4) return std::nullopt;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != 2) continue;
    const std::vector<int> nb = g.neighbors(v).vertices();
    const int x = nb[0], y = nb[1];
    if (g.has_edge(x, y)) continue;
    const VertexSet core = g.vertices() - VertexSet::of({v, x, y});
    const VertexSet need = core | VertexSet::single(v);
    if (need.subset_of(g.neighbors(x)) && need.subset_of(g.neighbors(y)))
      return FamilyFWitness{v, x, y, core};
  }
  return std::nullopt;
}

Graph generate_family_F(int core_order, const std::vector<std::pair<int, int>>& core_edges) {
  if (core_order < 1) throw std::invalid_argument("the core needs at least one vertex");
  if (core_order + 3 > kMaxOrder) throw std::invalid_argument("core too large");
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}};
  for (int i = 0; i < core_order; ++i) {
    edges.emplace_back(1, 3 + i);
    edges.emplace_back(2, 3 + i);
  }
  for (auto [a, b] : core_edges) {
    if (a < 0 || a >= core_order || b < 0 || b >= core_order)
      throw std::invalid_argument("core edge endpoint out of range");
    edges.emplace_back(3 + a, 3 + b);  // the Graph constructor rejects loops
  }
  return Graph(core_order + 3, edges);
}

int cmin_formula_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycles need order >= 3");
  switch (n) {
    case 3: return 3;
    case 4: return 4;
    case 5: return 3;
    default: return 2;
  }
}

int cmin_formula_tree(const Graph& t) {
  if (!t.is_tree()) throw std::invalid_argument("not a tree");
  const int n = t.order();
  if (n < 2) throw std::invalid_argument("the tree formula needs order >= 2");
  const bool star = n >= 3 && t.max_degree() == n - 1;
  return star ? 3 : 2;
}

namespace {

CminResult dispatch_no_universal(const Graph& g, bool fast_only) {
  const int n = g.order();

  if (g.is_cycle()) {
    const int value = cmin_formula_cycle(n);
    SetPartition p = SetPartition::singletons(n);
    if (n == 5) {
      // Two adjacent pairs and a lone vertex, following the actual cyclic
      // order (the labels need not run around the cycle).
      std::vector<int> walk{0, g.neighbors(0).lowest()};
      while (static_cast<int>(walk.size()) < 5) {
        const VertexSet next =
            g.neighbors(walk.back()) - VertexSet::of({walk[walk.size() - 2], walk.back()});
        walk.push_back((next - VertexSet::single(0)).lowest());
      }
      p = SetPartition::of(5, {VertexSet::of({walk[0], walk[1]}), VertexSet::of({walk[2], walk[3]}),
                               VertexSet::single(walk[4])});
    } else if (n >= 6) {
      const VertexSet near = g.closed_neighborhood(0);
      p = SetPartition::of(n, {near, g.vertices() - near});
    }
    return {value, Method::Formula, certified(g, p, "cycle"), std::nullopt, false};
  }

  if (g.is_tree()) {
    const int value = cmin_formula_tree(g);  // stars have a universal vertex, so value == 2
    const int v = *test_cmin_eq_2(g);
    const VertexSet near = g.closed_neighborhood(v);
    SetPartition p = SetPartition::of(n, {near, g.vertices() - near});
    return {value, Method::Formula, certified(g, p, "tree"), std::nullopt, false};
  }

  if (auto v = test_cmin_eq_2(g)) {
    const VertexSet near = g.closed_neighborhood(*v);
    SetPartition p = SetPartition::of(n, {near, g.vertices() - near});
    return {2, Method::Recognizer, certified(g, p, "two blocks"), std::nullopt, false};
  }

  // Every closed neighborhood dominates from here on.
  if (g.is_connected() && n >= 3 && property_star(g)) {
    return {n, Method::Recognizer, certified(g, SetPartition::singletons(n), "all singletons"),
            std::nullopt, false};
  }

  if (g.min_degree() == 2) {
    if (auto w = is_family_F(g)) {
      SetPartition p = SetPartition::of(
          n, {VertexSet::single(w->apex), VertexSet::single(w->hub_a),
              VertexSet::single(w->hub_b), w->core});
      return {4, Method::Recognizer, certified(g, p, "degree-2 family"), std::nullopt, false};
    }
  }

  try {
    if (auto split = find_non_dominating_split(g)) {
      const VertexSet rest = g.vertices() - g.closed_neighborhood(split->vertex);
      SetPartition p = SetPartition::of(n, {split->part_a, split->part_b, rest});
      return {3, Method::Recognizer, certified(g, p, "three blocks"), std::nullopt, false};
    }
  } catch (const std::invalid_argument&) {
    // Degree above the split-search cap: fall through to exhaustive search.
  }

  if (fast_only) return {std::nullopt, Method::BruteForce, std::nullopt, std::nullopt, true};
  return cmin_bruteforce(g);
}

}  // namespace

CminResult cmin_dispatch(const Graph& g, bool fast_only) {
  const int n = g.order();

  if (g.is_complete()) {
    return {n, Method::Formula, certified(g, SetPartition::singletons(n), "complete"),
            std::nullopt, false};
  }

  if (g.has_universal_vertex()) {
    LabeledStrip s = strip_universal_labeled(g);
    const int stripped = static_cast<int>(s.stripped.size());
    CminResult inner = dispatch_no_universal(s.residual, fast_only);
    CminResult out{std::nullopt, Method::Reduction, std::nullopt,
                   ReductionTrace{stripped, s.residual}, inner.inconclusive};
    if (!inner.value) return out;
    out.value = *inner.value + stripped;
    // Lift the residual certificate: residual blocks keep their role, each
    // stripped vertex (universal in g) rides along as its own block.
    std::vector<VertexSet> blocks;
    for (const VertexSet& b : inner.certificate->partition.blocks) {
      VertexSet lifted;
      for (int v : b.vertices()) lifted.add(s.original_label[v]);
      blocks.push_back(lifted);
    }
    for (int v : s.stripped) blocks.push_back(VertexSet::single(v));
    out.certificate = certified(g, SetPartition::of(n, std::move(blocks)), "lifted");
    return out;
  }

  return dispatch_no_universal(g, fast_only);
}

}  // namespace mincoal
