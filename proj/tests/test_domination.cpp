#include <doctest.h>

#include "mincoal/corpus.hpp"
#include "mincoal/domination.hpp"
#include "mincoal/graph.hpp"
#include "oracle.hpp"

using namespace mincoal;

TEST_CASE("dominated vertices are closed neighborhood unions") {
  const Graph p4 = path_graph(4);
  CHECK(dominated_vertices(p4, VertexSet::single(1)) == VertexSet::of({0, 1, 2}));
  CHECK(dominated_vertices(p4, VertexSet::of({0, 3})) == VertexSet::full(4));
  CHECK(dominated_vertices(p4, VertexSet()) == VertexSet());
  CHECK(undominated_vertices(p4, VertexSet::single(0)) == VertexSet::of({2, 3}));
  CHECK(undominated_vertices(p4, VertexSet::of({1, 3})).empty());
}

TEST_CASE("dominating set membership, including the empty-set edge case") {
  const Graph p4 = path_graph(4);
  CHECK(is_dominating_set(p4, VertexSet::of({1, 3})));
  CHECK(is_dominating_set(p4, VertexSet::of({0, 3})));
  CHECK(!is_dominating_set(p4, VertexSet::of({0, 1})));
  CHECK(!is_dominating_set(p4, VertexSet()));
  CHECK(!is_dominating_set(complete_graph(1), VertexSet()));
  CHECK(is_dominating_set(complete_graph(1), VertexSet::single(0)));
  CHECK_THROWS_AS(is_dominating_set(p4, VertexSet::of({4})), std::invalid_argument);
}

TEST_CASE("every vertex dominates a complete graph; isolated vertices are mandatory") {
  const Graph k5 = complete_graph(5);
  for (int v = 0; v < 5; ++v) CHECK(is_dominating_set(k5, VertexSet::single(v)));
  CHECK(domination_number(k5) == 1);

  const Graph two_isolated = empty_graph(2);
  CHECK(!is_dominating_set(two_isolated, VertexSet::single(0)));
  CHECK(domination_number(two_isolated) == 2);
}

TEST_CASE("domination numbers of standard graphs") {
  CHECK(domination_number(path_graph(6)) == 2);
  CHECK(domination_number(path_graph(7)) == 3);
  CHECK(domination_number(cycle_graph(4)) == 2);
  CHECK(domination_number(cycle_graph(7)) == 3);
  CHECK(domination_number(star_graph(6)) == 1);
  CHECK(domination_number(petersen_graph()) == 3);
  CHECK(domination_number(heawood_graph()) == 4);
  CHECK(domination_number(complete_multipartite_graph({2, 2, 2})) == 2);
}

TEST_CASE("minimum dominating set is the least witness and actually dominates") {
  CHECK(minimum_dominating_set(path_graph(6)) == VertexSet::of({1, 4}));
  CHECK(minimum_dominating_set(star_graph(4)) == VertexSet::single(0));
  CHECK(minimum_dominating_set(complete_graph(3)) == VertexSet::single(0));

  const Graph pet = petersen_graph();
  const VertexSet d = minimum_dominating_set(pet);
  CHECK(d.size() == domination_number(pet));
  CHECK(is_dominating_set(pet, d));
}

TEST_CASE("domination agrees with the naive oracle on all labeled graphs up to order 5") {
  for (int n = 1; n <= 5; ++n) {
    LabeledGraphStream stream(n);
    while (auto g = stream.next()) {
      CHECK(domination_number(*g) == oracle::gamma(*g));
      const std::uint64_t all = VertexSet::full(n).bits;
      for (std::uint64_t mask = 0; mask <= all; ++mask) {
        const VertexSet s(mask);
        CHECK(is_dominating_set(*g, s) == oracle::dominates(*g, s.vertices()));
      }
    }
  }
}
