#include <doctest.h>

#include <random>

#include "homcount/canonical.hpp"
#include "homcount/errors.hpp"
#include "oracle.hpp"

using namespace homcount;

TEST_CASE("isomorphism examples") {
  CHECK(is_isomorphic(path(3), star(3)));
  CHECK(!is_isomorphic(cycle(6), replicate(2, cycle(3))));
  CHECK(is_isomorphic(tensor_product(path(2), cycle(9)), cycle(18)));
}

TEST_CASE("property: canonical form is invariant under relabelling") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_sized(rng, 1, 12);
    const Graph h = oracle::relabel(g, rng);
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(canonical_graph(h) == canonical_graph(g));
  }
}

TEST_CASE("property: canonical forms separate exactly the isomorphism classes (oracle, n <= 6)") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto reps = oracle::graphs_by_mask(n);
    std::set<CanonicalForm> forms;
    for (const auto& g : reps) forms.insert(canonical_form(g));
    CHECK(forms.size() == reps.size());
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Graph a = oracle::random_graph(rng, 5, 0.5), b = oracle::random_graph(rng, 5, 0.5);
    CHECK(is_isomorphic(a, b) == oracle::isomorphic(a, b));
  }
}

TEST_CASE("regular graphs of the same size are told apart") {
  // Two 3-regular graphs on 8 vertices: the cube and the Wagner graph.
  std::vector<Edge> cube, wagner;
  for (Vertex v = 0; v < 8; ++v)
    for (Vertex b = 1; b < 8; b <<= 1)
      if (v < (v ^ b)) cube.emplace_back(v, v ^ b);
  for (Vertex v = 0; v < 8; ++v) {
    wagner.emplace_back(v, (v + 1) % 8);
    if (v < 4) wagner.emplace_back(v, v + 4);
  }
  CHECK(!is_isomorphic(Graph::from_edges(8, cube), Graph::from_edges(8, wagner)));
  std::mt19937_64 rng(12);
  const Graph w = Graph::from_edges(8, wagner);
  CHECK(is_isomorphic(w, oracle::relabel(w, rng)));
}

TEST_CASE("component budget") {
  CHECK_THROWS_AS(canonical_form(cycle(30)), BudgetError);
  CHECK_NOTHROW(canonical_form(replicate(5, cycle(20))));
  CHECK(component_forms(replicate(3, cycle(4))).size() == 3);
}
