#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mincoal/coalition.hpp"
#include "mincoal/graph.hpp"

namespace mincoal {

// Removes universal vertices one at a time until none remain. Throws
// std::invalid_argument when g is complete (the residual would be empty);
// returns {0, g} when g has no universal vertex.
ReductionTrace strip_universal(const Graph& g);

// For graphs with no universal vertex: the smallest vertex whose closed
// neighborhood does not dominate, if any. Such a vertex exists iff the
// smallest c-partition has exactly 2 blocks ({N[v], rest} being one).
std::optional<int> test_cmin_eq_2(const Graph& g);

// For graphs with no universal vertex: true iff every closed neighborhood
// dominates, which holds iff every c-partition needs at least 3 blocks.
bool test_cmin_ge_3(const Graph& g);

inline constexpr int kDefaultDegreeCap = 20;

// A vertex whose closed neighborhood splits into two parts neither of which
// dominates. Found => a 3-block c-partition {part_a, part_b, rest} exists
// (rest may be empty, in which case the two parts already witness 2 blocks,
// but callers use this only after test_cmin_ge_3 passed).
struct NeighborhoodSplit {
  int vertex = -1;
  VertexSet part_a, part_b;
};
// Smallest witness by (vertex, part containing vertex). Returns nullopt when
// every split of every closed neighborhood has a dominating side. Throws
// std::invalid_argument when some degree exceeds degree_cap (the search
// would enumerate 2^deg splits).
std::optional<NeighborhoodSplit> find_non_dominating_split(const Graph& g,
                                                           int degree_cap = kDefaultDegreeCap);
// True iff no such split exists: every c-partition needs at least 4 blocks
// (given test_cmin_ge_3). Same degree-cap behaviour.
bool test_cmin_ge_4(const Graph& g, int degree_cap = kDefaultDegreeCap);

// True iff for every pair of non-universal vertices {u, v} the set {u, v}
// dominates. For connected graphs of order >= 3 this holds iff every
// c-partition has n blocks, i.e. the all-singletons partition is the only
// one and the smallest c-partition order equals the order of the graph.
bool property_star(const Graph& g);

// Graphs built from K_1, K_2 or the 2-vertex empty graph by repeatedly
// joining K_1 or a 2-vertex empty graph on the left.
struct MDerivation {
  enum class Base { K1, K2, K2bar };
  enum class Step { AddK1, AddK2bar };

  Base base = Base::K1;
  std::vector<Step> steps;  // innermost first: replay applies steps[0] first

  int order() const;
  Graph replay() const;  // rebuilds the derived graph (labels as joined)
  nlohmann::json to_json() const;

  bool operator==(const MDerivation&) const = default;
};
// Membership test with derivation witness. The replayed derivation is an
// isomorphic copy, not necessarily identically labeled.
std::optional<MDerivation> is_family_M(const Graph& g);

// Graphs with a degree-2 vertex (apex) whose two neighbors (hubs) are
// nonadjacent and adjacent to every other vertex. The rest (core) is
// nonempty, so the order is at least 4. Such graphs have min degree 2, no
// universal vertex, and smallest c-partition order exactly 4.
struct FamilyFWitness {
  int apex = -1;
  int hub_a = -1, hub_b = -1;
  VertexSet core;

  nlohmann::json to_json() const;
  bool operator==(const FamilyFWitness&) const = default;
};
std::optional<FamilyFWitness> is_family_F(const Graph& g);

// Builds the member with apex 0, hubs 1 and 2, core 3..core_order+2 carrying
// the given extra edges (labeled 0..core_order-1 within the core).
Graph generate_family_F(int core_order, const std::vector<std::pair<int, int>>& core_edges);

// Closed forms. Throw std::invalid_argument outside their domain.
int cmin_formula_cycle(int n);        // n >= 3
int cmin_formula_tree(const Graph& t);  // t a tree of order >= 2

// Full decision pipeline: closed forms and recognizers first, exhaustive
// search as a last resort. Set fast_only to forbid the exhaustive fallback
// (value stays empty and method is BruteForce when it would have been used).
CminResult cmin_dispatch(const Graph& g, bool fast_only = false);

}  // namespace mincoal
