#include <doctest.h>

#include <random>

#include "homcount/canonical.hpp"
#include "homcount/enumerate.hpp"
#include "homcount/errors.hpp"
#include "homcount/right_hom.hpp"
#include "homcount/structure.hpp"
#include "oracle.hpp"

using namespace homcount;

TEST_CASE("property: for_each_hom visits exactly the homomorphisms") {
  std::mt19937_64 rng(50);
  for (int i = 0; i < 60; ++i) {
    const Graph g = oracle::random_sized(rng, 1, 5), f = oracle::random_sized(rng, 1, 5);
    std::size_t n = 0;
    bool all_valid = true;
    for_each_hom(g, f, [&](std::span<const Vertex> m) {
      ++n;
      for (const auto& [u, v] : g.edges()) all_valid = all_valid && f.adjacent(m[u], m[v]);
      return true;
    });
    CHECK(all_valid);
    CHECK(mpz_class(static_cast<unsigned long>(n)) == oracle::count(oracle::Kind::hom, g, f));
  }
  std::size_t seen = 0;
  for_each_hom(edgeless(3), clique(3), [&](std::span<const Vertex>) { return ++seen < 5; });
  CHECK(seen == 5);
}

TEST_CASE("quotient examples") {
  const std::vector<Graph> k3{clique(3)}, k1{Graph()};
  const Graph g = replicate(2, cycle(3));
  const Quotient q = quotient_graph(g, k3);
  CHECK(q.counts == std::vector<CountValue>{36});
  CHECK(oracle::hom_search(q.graph, clique(3)) == 36);
  const Quotient p = quotient_graph(cycle(5), k1);
  CHECK(p.regime == Quotient::Regime::single_vertex_family);
  CHECK(is_isomorphic(p.graph, path(2)));
  const Quotient z = quotient_graph(clique(4), k3);
  CHECK(z.regime == Quotient::Regime::all_zero);
  CHECK(is_isomorphic(z.graph, clique(4)));
  CHECK_THROWS_AS(quotient_graph(edgeless(8), std::vector<Graph>{clique(8)}, 1000), BudgetError);
}

TEST_CASE("property: quotients preserve right counts on random inputs") {
  std::mt19937_64 rng(51);
  const std::vector<Graph> pool{clique(2), clique(3), path(3), cycle(4), cycle(5), Graph()};
  for (int i = 0; i < 40; ++i) {
    const Graph g = oracle::random_sized(rng, 1, 6);
    std::vector<Graph> fam;
    for (const auto& f : pool)
      if (rng() % 2) fam.push_back(f);
    if (fam.empty()) fam.push_back(cycle(5));
    const Quotient q = quotient_graph(g, fam);
    for (std::size_t j = 0; j < fam.size(); ++j) CHECK(oracle::hom_search(q.graph, fam[j]) == oracle::hom_search(g, fam[j]));
    if (q.size_bound) CHECK(*q.size_bound >= static_cast<unsigned long>(q.graph.order()));
    CHECK(q.graph.order() <= std::max<std::size_t>(g.order(), 7));
  }
}

TEST_CASE("bounded-edge family") {
  const RightFamily f = bounded_edge_family(1);
  CHECK(f.cap == 8);
  CHECK(!f.reduced);
  CHECK(f.warning.empty());
  CHECK(f.base_size == enumerate_graphs_upto(8).size());
  CHECK(f.graphs.size() == 2 * f.base_size);
  for (std::size_t i = 0; i < f.base_size; i += 97)
    CHECK(is_isomorphic(f.graphs[f.base_size + i], disjoint_union(f.graphs[i], Graph())));
  const RightFamily r = bounded_edge_family(2, 5);
  CHECK(r.reduced);
  CHECK(!r.warning.empty());
  CHECK(r.cap == 5);
  CHECK(bounded_edge_family(2).reduced);
}

TEST_CASE("right membership for at most one edge") {
  const auto pred = [](const Graph& g) { return g.edge_count() <= 1; };
  CHECK(right_membership(pred, 1, disjoint_union(path(2), Graph())).member);
  CHECK(!right_membership(pred, 1, path(3)).member);
  const RightDecision e = right_membership(pred, 1, edgeless(5));
  CHECK(e.member);
  CHECK(e.edgeless);
  CHECK(e.isolated == 5);
  const RightDecision d = right_membership(pred, 1, disjoint_union(edgeless(2), path(2)));
  CHECK(d.isolated == 2);
  REQUIRE(d.without_isolated.has_value());
  CHECK(is_isomorphic(*d.without_isolated, path(2)));
  GraphOracle left(path(2));
  CHECK_THROWS(right_membership(pred, bounded_edge_family(1), left));
}

TEST_CASE("isolated count from a ratio") {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 40; ++i) {
    const Graph core = oracle::random_connected(rng, 3, 0.6);
    const std::size_t iso = rng() % 4;
    const Graph g = iso ? disjoint_union(core, edgeless(iso)) : core;
    const std::size_t c = oracle::chromatic(core) + 1;
    const auto a = oracle::hom_search(g, clique(c));
    const auto b = oracle::hom_search(g, disjoint_union(clique(c), Graph()));
    CHECK(isolated_from_ratio(a, b, c) == iso);
  }
}

TEST_CASE("Lemma chain at k = 2") {
  const PowRightReport a = powright_inequality_check(edgeless(9), 2);
  mpz_class eight9;
  mpz_ui_pow_ui(eight9.get_mpz_t(), 8, 9);
  CHECK(a.hom_big == eight9);
  CHECK(a.threshold == 64);
  CHECK(a.k_colorable);
  CHECK(a.holds);
  const PowRightReport b = powright_inequality_check(cycle(9), 2);
  CHECK(!b.k_colorable);
  CHECK(b.holds);
  CHECK(powright_small_side_max(2) == 64);
  std::mt19937_64 rng(53);
  for (int i = 0; i < 20; ++i) {
    const Graph h = oracle::random_graph(rng, 6, 0.3);
    const PowRightReport r = powright_inequality_check(h, 2);
    CHECK(r.k_colorable == oracle::colorable(h, 2));
    CHECK(r.hom_big == oracle::hom_search(h, clique(8)));
    CHECK((r.hom_big > 64 || !r.k_colorable));
    CHECK(r.holds);
  }
}

TEST_CASE("triangle demo") {
  const FailureDemo d3 = right_failure_demo(3);
  CHECK(oracle::isomorphic(d3.g0, cycle(5)));
  for (const auto& f : enumerate_graphs_upto(2))
    if (f.edge_count() > 0) CHECK(oracle::hom_search(d3.g0, f) == 0);
  const FailureDemo d4 = right_failure_demo(4);
  CHECK(oracle::chromatic(d4.g0) == 4);
  CHECK(oracle::triangle_free(d4.g0));
  CHECK(oracle::hom_search(d4.g0, clique(3)) == 0);
  CHECK(oracle::hom_search(clique(4), clique(3)) == 0);
  CHECK(!oracle::triangle_free(clique(4)));
  CHECK(d4.g0_counts == d4.clique_counts);
  CHECK_THROWS(right_failure_demo(5));
}

TEST_CASE("clique plus isolated vertex") {
  const auto fam = enumerate_graphs_upto(3);
  const CliqueIsolatedDemo d = clique_isolated_demo(fam);
  CHECK(d.m == 4);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    CHECK(d.clique_counts[i] == 0);
    CHECK(d.clique_plus_k1_counts[i] == 0);
  }
}
